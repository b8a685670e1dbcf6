#pragma once

#include <string>
#include <vector>

#include "polygon.hpp"

namespace heartlib {

struct VerifyLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  int failures = 0;
  std::string text;
};

// cross-checks the fast paths against the shipped oracles on one body
VerifyReport verify_body(const ConvexPolygon& k, int n_directions, double tol,
                         unsigned long long seed);

}  // namespace heartlib
