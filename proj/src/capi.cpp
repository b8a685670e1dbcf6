#include "heartlib.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "errors.hpp"
#include "folding.hpp"
#include "fraenkel.hpp"
#include "heart_region.hpp"
#include "serialize.hpp"
#include "special_points.hpp"
#include "triangle_heart.hpp"
#include "verify.hpp"

struct heart_polygon {
  heartlib::ConvexPolygon k;
};

struct heart_profile {
  heartlib::FoldingProfile prof;
};

struct heart_region {
  heartlib::HeartResult h;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

heart_status map_code(heartlib::errc code) {
  using heartlib::errc;
  switch (code) {
    case errc::invalid_argument: return HEART_ERR_INVALID_ARGUMENT;
    case errc::too_few_vertices: return HEART_ERR_TOO_FEW_VERTICES;
    case errc::not_convex: return HEART_ERR_NOT_CONVEX;
    case errc::degenerate: return HEART_ERR_DEGENERATE;
    case errc::monotonicity_violation: return HEART_ERR_MONOTONICITY_VIOLATION;
    case errc::degenerate_triangle: return HEART_ERR_DEGENERATE_TRIANGLE;
    case errc::not_obtuse_configuration: return HEART_ERR_NOT_OBTUSE_CONFIGURATION;
    case errc::point_too_close_to_boundary:
      return HEART_ERR_POINT_TOO_CLOSE_TO_BOUNDARY;
    case errc::parse_error: return HEART_ERR_PARSE;
    case errc::io_error: return HEART_ERR_IO;
    case errc::internal_error: return HEART_ERR_INTERNAL;
  }
  return HEART_ERR_INTERNAL;
}

template <class F>
heart_status guarded(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return HEART_OK;
  } catch (const heartlib::geometry_error& e) {
    set_error(e.what());
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return HEART_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HEART_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return HEART_ERR_INTERNAL;
  }
}

heart_status arg_error(const char* msg) {
  set_error(msg);
  return HEART_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double pick_tol(const heartlib::ConvexPolygon& k, double tol) {
  return tol > 0.0 ? tol : heartlib::default_tolerance(k);
}

}  // namespace

extern "C" {

heart_status heart_polygon_from_json(const char* json_text, heart_polygon** out) {
  if (!json_text || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* p = new heart_polygon{heartlib::polygon_from_json(json_text)};
    *out = p;
  });
}

heart_status heart_polygon_from_points(const double* xy, size_t n_points,
                                       heart_polygon** out) {
  if (!xy || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&] {
    heartlib::Chain pts;
    pts.reserve(n_points);
    for (size_t i = 0; i < n_points; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
    auto* p = new heart_polygon{heartlib::make_polygon(pts)};
    *out = p;
  });
}

heart_status heart_polygon_to_json(const heart_polygon* k, char** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] { *out = copy_string(heartlib::polygon_to_json(k->k)); });
}

void heart_polygon_free(heart_polygon* k) { delete k; }

size_t heart_polygon_vertex_count(const heart_polygon* k) {
  return k ? k->k.vertices.size() : 0;
}

heart_status heart_polygon_vertex(const heart_polygon* k, size_t i, double* x,
                                  double* y) {
  if (!k || !x || !y) return arg_error("null argument");
  if (i >= k->k.vertices.size()) return arg_error("vertex index out of range");
  *x = k->k.vertices[i].x;
  *y = k->k.vertices[i].y;
  return HEART_OK;
}

heart_status heart_polygon_stats(const heart_polygon* k, double* area,
                                 double* diameter, double* centroid_x,
                                 double* centroid_y) {
  if (!k) return arg_error("null argument");
  return guarded([&] {
    if (area) *area = heartlib::polygon_area(k->k);
    if (diameter) *diameter = heartlib::polygon_diameter(k->k);
    const heartlib::Point2 m = heartlib::polygon_centroid(k->k);
    if (centroid_x) *centroid_x = m.x;
    if (centroid_y) *centroid_y = m.y;
  });
}

double heart_default_tol(const heart_polygon* k) {
  return k ? heartlib::default_tolerance(k->k) : 0.0;
}

heart_status heart_profile_compute(const heart_polygon* k, int n_directions,
                                   double tol, heart_profile** out) {
  if (!k || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* p = new heart_profile{
        heartlib::folding_profile(k->k, n_directions, pick_tol(k->k, tol))};
    *out = p;
  });
}

heart_status heart_profile_to_json(const heart_profile* prof, char** out) {
  if (!prof || !out) return arg_error("null argument");
  return guarded([&] { *out = copy_string(heartlib::profile_to_json(prof->prof)); });
}

void heart_profile_free(heart_profile* prof) { delete prof; }

heart_status heart_build(const heart_polygon* k, int n_directions, double tol,
                         heart_region** out) {
  if (!k || !out) return arg_error("null argument");
  *out = nullptr;
  return guarded([&] {
    auto* h = new heart_region{
        heartlib::build_heart(k->k, n_directions, pick_tol(k->k, tol))};
    *out = h;
  });
}

heart_status heart_region_to_json(const heart_region* h, char** out) {
  if (!h || !out) return arg_error("null argument");
  return guarded([&] { *out = copy_string(heartlib::heart_to_json(h->h)); });
}

void heart_region_free(heart_region* h) { delete h; }

size_t heart_region_vertex_count(const heart_region* h) {
  return h ? h->h.region.size() : 0;
}

heart_status heart_region_vertex(const heart_region* h, size_t i, double* x,
                                 double* y) {
  if (!h || !x || !y) return arg_error("null argument");
  if (i >= h->h.region.size()) return arg_error("vertex index out of range");
  *x = h->h.region[i].x;
  *y = h->h.region[i].y;
  return HEART_OK;
}

heart_status heart_region_stats(const heart_region* h, double* area,
                                double* diameter, int* dimension) {
  if (!h) return arg_error("null argument");
  if (area) *area = h->h.area;
  if (diameter) *diameter = h->h.diameter;
  if (dimension) *dimension = h->h.dimension;
  return HEART_OK;
}

heart_status heart_special_points_json(const heart_polygon* k, int n_directions,
                                       double tol, double extra_p, char** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] {
    const double t = pick_tol(k->k, tol);
    const heartlib::HeartResult h = heartlib::build_heart(k->k, n_directions, t);
    const auto pts = heartlib::compute_special_points(k->k, h, t, extra_p);
    *out = copy_string(heartlib::special_points_to_json(pts));
  });
}

heart_status heart_fraenkel_json(const heart_polygon* k, double tol,
                                 double r_override, char** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] {
    const heartlib::FraenkelResult f =
        heartlib::fraenkel_asymmetry(k->k, pick_tol(k->k, tol), r_override);
    *out = copy_string(heartlib::fraenkel_to_json(f));
  });
}

heart_status heart_triangle_sweep_csv(const double* t_values, size_t n_values,
                                      double b, double h, char** out) {
  if (!t_values || !out) return arg_error("null argument");
  return guarded([&] {
    const std::vector<double> ts(t_values, t_values + n_values);
    const auto rows = heartlib::obtuse_sweep(b, h, ts);
    *out = copy_string(heartlib::sweep_to_csv(rows));
  });
}

heart_status heart_verify_report(const heart_polygon* k, int n_directions,
                                 double tol, unsigned long long seed,
                                 int* failures, char** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] {
    const heartlib::VerifyReport rep =
        heartlib::verify_body(k->k, n_directions, pick_tol(k->k, tol), seed);
    if (failures) *failures = rep.failures;
    *out = copy_string(rep.text);
  });
}

const char* heart_last_error(void) { return g_last_error.c_str(); }

const char* heart_status_name(heart_status s) {
  switch (s) {
    case HEART_OK: return "OK";
    case HEART_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case HEART_ERR_TOO_FEW_VERTICES: return "TooFewVertices";
    case HEART_ERR_NOT_CONVEX: return "NotConvex";
    case HEART_ERR_DEGENERATE: return "Degenerate";
    case HEART_ERR_MONOTONICITY_VIOLATION: return "MonotonicityViolation";
    case HEART_ERR_DEGENERATE_TRIANGLE: return "DegenerateTriangle";
    case HEART_ERR_NOT_OBTUSE_CONFIGURATION: return "NotObtuseConfiguration";
    case HEART_ERR_POINT_TOO_CLOSE_TO_BOUNDARY: return "PointTooCloseToBoundary";
    case HEART_ERR_PARSE: return "ParseError";
    case HEART_ERR_IO: return "IoError";
    case HEART_ERR_INTERNAL: return "InternalError";
  }
  return "InternalError";
}

void heart_string_free(char* s) { delete[] s; }

}  // extern "C"
