#pragma once

#include <stdexcept>
#include <string>

namespace heartlib {

enum class errc {
  invalid_argument,
  too_few_vertices,
  not_convex,
  degenerate,
  monotonicity_violation,
  degenerate_triangle,
  not_obtuse_configuration,
  point_too_close_to_boundary,
  parse_error,
  io_error,
  internal_error,
};

class geometry_error : public std::runtime_error {
 public:
  geometry_error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw geometry_error(code, msg);
}

const char* errc_name(errc code);

}  // namespace heartlib
