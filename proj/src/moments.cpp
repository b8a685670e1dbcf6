#include "moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "folding.hpp"
#include "gauss.hpp"

namespace heartlib {

namespace {

double ipow(double base, int n) {
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

struct EdgeFrame {
  Point2 a;   // edge start relative to x
  Point2 e;   // edge vector
  double j0;  // cross(a, e); twice the signed area of triangle (x, A, B)
};

std::vector<EdgeFrame> edge_frames(const ConvexPolygon& k, Point2 x) {
  std::vector<EdgeFrame> frames;
  frames.reserve(k.vertices.size());
  for (size_t i = 0; i < k.vertices.size(); ++i) {
    Point2 a = k.vertices[i] - x;
    Point2 e = k.vertices[(i + 1) % k.vertices.size()] - x - a;
    frames.push_back({a, e, cross(a, e)});
  }
  return frames;
}

bool is_even_integer(double p) {
  double r = std::round(p);
  return std::fabs(p - r) <= 1e-12 * std::max(1.0, std::fabs(p)) && std::fmod(r, 2.0) == 0.0;
}

// fan from the centroid with a tensor rule of sufficient degree; exact since
// |y-x|^p is then a polynomial of total degree p in the triangle coordinates
double mu_even_exact(const ConvexPolygon& k, Point2 x, int ip, int order) {
  int q = std::max(order, ip / 2 + 1);
  const GaussRule& rule = gauss_rule(q);
  Point2 m = polygon_centroid(k);
  int half = ip / 2;
  double total = 0.0;
  for (size_t i = 0; i < k.vertices.size(); ++i) {
    Point2 u = k.vertices[i] - m;
    Point2 w = k.vertices[(i + 1) % k.vertices.size()] - k.vertices[i];
    double j0 = cross(u, w);
    if (j0 == 0.0) continue;
    double s = 0.0;
    for (size_t a = 0; a < rule.nodes.size(); ++a) {
      double su = 0.5 * (rule.nodes[a] + 1.0);
      double wu = 0.5 * rule.weights[a] * su;  // su is the fan Jacobian
      double row = 0.0;
      for (size_t b = 0; b < rule.nodes.size(); ++b) {
        double sv = 0.5 * (rule.nodes[b] + 1.0);
        double wv = 0.5 * rule.weights[b];
        Point2 y = m + su * (u + sv * w);
        row += wv * ipow(norm2(y - x), half);
      }
      s += wu * row;
    }
    total += j0 * s;
  }
  return total;
}

}  // namespace

double mu_p_value(const ConvexPolygon& k, Point2 x, double p, int order) {
  if (!(p > 0.0)) fail(errc::invalid_argument, "power moment needs p > 0");
  if (!std::isfinite(x.x) || !std::isfinite(x.y)) fail(errc::invalid_argument, "moment point must be finite");
  if (is_even_integer(p)) return mu_even_exact(k, x, static_cast<int>(std::round(p)), order);

  double total = 0.0;
  for (const auto& ef : edge_frames(k, x)) {
    if (ef.j0 == 0.0) continue;
    auto integrand = [&](double v) {
      Point2 q = ef.a + v * ef.e;
      return std::pow(norm2(q), 0.5 * p);
    };
    total += ef.j0 / (p + 2.0) * adaptive_gauss(integrand, 0.0, 1.0, 1e-12, order);
  }
  return total;
}

double mu_log_value(const ConvexPolygon& k, Point2 x, int order) {
  if (!std::isfinite(x.x) || !std::isfinite(x.y)) fail(errc::invalid_argument, "moment point must be finite");
  double total = 0.0;
  for (const auto& ef : edge_frames(k, x)) {
    if (ef.j0 == 0.0) continue;
    auto integrand = [&](double v) {
      Point2 q = ef.a + v * ef.e;
      return std::log(norm2(q));
    };
    total += ef.j0 * (-0.25 + 0.25 * adaptive_gauss(integrand, 0.0, 1.0, 1e-12, order));
  }
  return total;
}

double nu_p_value(const ConvexPolygon& k, Point2 x, double p, int order) {
  if (!(p > 2.0)) fail(errc::invalid_argument, "inverse moment needs p > 2 in the plane");
  double clearance = boundary_clearance(edge_planes(k), x);
  if (clearance <= default_tolerance(k))
    fail(errc::point_too_close_to_boundary, "inverse moment needs a strictly interior point");

  double total = 0.0;
  for (const auto& ef : edge_frames(k, x)) {
    if (ef.j0 == 0.0) continue;
    auto integrand = [&](double v) {
      Point2 q = ef.a + v * ef.e;
      return std::pow(norm2(q), -0.5 * p);
    };
    total += ef.j0 / (p - 2.0) * adaptive_gauss(integrand, 0.0, 1.0, 1e-12, order);
  }
  return total;
}

double moment_value(const ConvexPolygon& k, Point2 x, const MomentSpec& spec) {
  switch (spec.kind) {
    case MomentKind::power_p: return mu_p_value(k, x, spec.p, spec.quadrature_order);
    case MomentKind::inverse_p: return nu_p_value(k, x, spec.p, spec.quadrature_order);
    case MomentKind::log_kernel: return mu_log_value(k, x, spec.quadrature_order);
  }
  fail(errc::internal_error, "unknown moment kind");
}

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

struct ChordRange {
  double lo = 0.0, hi = 0.0;
  bool ok = false;
};

ChordRange vertical_chord(const ConvexPolygon& k, double x) {
  ChordRange r;
  const Chain& v = k.vertices;
  double ylo = std::numeric_limits<double>::infinity();
  double yhi = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i) {
    Point2 a = v[i], b = v[(i + 1) % v.size()];
    if ((a.x - x) * (b.x - x) <= 0.0) {
      if (a.x == b.x) {
        ylo = std::min({ylo, a.y, b.y});
        yhi = std::max({yhi, a.y, b.y});
      } else {
        double y = a.y + (x - a.x) / (b.x - a.x) * (b.y - a.y);
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
      }
      r.ok = true;
    }
  }
  r.lo = ylo;
  r.hi = yhi;
  return r;
}

}  // namespace

InteriorSearch minimize_convex_over_polygon(const ConvexPolygon& k,
                                            const std::function<double(Point2)>& f,
                                            double tol, double chord_margin) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");
  BoundingBox box = bounding_box(k.vertices);
  int evals = 0;

  auto golden = [&](double lo, double hi, const std::function<double(double)>& g) {
    double a = lo, b = hi;
    double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
    double fc = g(c), fd = g(d);
    while (b - a > tol) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kGolden * (b - a);
        fc = g(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kGolden * (b - a);
        fd = g(d);
      }
    }
    return 0.5 * (a + b);
  };

  auto best_on_chord = [&](double x) -> std::pair<double, double> {  // (value, y)
    ChordRange chord = vertical_chord(k, x);
    if (!chord.ok) {
      // x fell a hair outside the extent; clamp to the nearest vertex column
      double cx = std::clamp(x, box.xmin, box.xmax);
      chord = vertical_chord(k, cx);
      if (!chord.ok) fail(errc::internal_error, "empty vertical chord inside bounding box");
    }
    double lo = chord.lo + chord_margin, hi = chord.hi - chord_margin;
    if (hi <= lo) {
      double y = 0.5 * (chord.lo + chord.hi);
      ++evals;
      return {f({x, y}), y};
    }
    double y = golden(lo, hi, [&](double yy) {
      ++evals;
      return f({x, yy});
    });
    ++evals;
    return {f({x, y}), y};
  };

  double xlo = box.xmin, xhi = box.xmax;
  double margin_x = std::min(chord_margin, 0.25 * (xhi - xlo));
  xlo += margin_x;
  xhi -= margin_x;

  double xbest = golden(xlo, xhi, [&](double x) { return best_on_chord(x).first; });
  auto [value, ybest] = best_on_chord(xbest);

  InteriorSearch out;
  out.point = {xbest, ybest};
  out.value = value;
  out.iterations = evals;
  return out;
}

namespace {

// flat means the objective cannot distinguish nearby points from the optimum
bool probes_flat(const ConvexPolygon& k, const std::function<double(Point2)>& f,
                 Point2 at, double h, double v0, double threshold) {
  auto planes = edge_planes(k);
  double vmin = v0, vmax = v0;
  int used = 0;
  const Point2 dirs[4] = {{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}};
  for (const auto& d : dirs) {
    Point2 q = at + d;
    if (!contains_point(planes, q, 0.0)) continue;
    double v = f(q);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    ++used;
  }
  return used >= 2 && (vmax - vmin) < threshold;
}

MinimizerResult finish_minimizer(const ConvexPolygon& k, const std::function<double(Point2)>& f,
                                 const InteriorSearch& s, double tol) {
  MinimizerResult r;
  r.point = s.point;
  r.value = s.value;
  r.iterations = s.iterations;
  double h = std::max(1e-3 * polygon_diameter(k), 100.0 * tol);
  r.flat_flag = probes_flat(k, f, s.point, h, s.value, 1e-8 * (std::fabs(s.value) + 1.0));
  return r;
}

}  // namespace

MinimizerResult minimize_mu_p(const ConvexPolygon& k, double p, double tol) {
  if (!(p > 0.0)) fail(errc::invalid_argument, "power moment needs p > 0");
  auto f = [&](Point2 q) { return mu_p_value(k, q, p); };
  return finish_minimizer(k, f, minimize_convex_over_polygon(k, f, tol), tol);
}

MinimizerResult minimize_nu_p(const ConvexPolygon& k, double p, double tol) {
  if (!(p > 2.0)) fail(errc::invalid_argument, "inverse moment needs p > 2 in the plane");
  auto planes = edge_planes(k);
  double guard = 2.0 * std::max(tol, default_tolerance(k));
  auto f = [&, planes](Point2 q) {
    if (boundary_clearance(planes, q) <= guard) return std::numeric_limits<double>::max() / 4.0;
    return nu_p_value(k, q, p);
  };
  return finish_minimizer(k, f, minimize_convex_over_polygon(k, f, tol, tol), tol);
}

MinimizerResult minimize_mu_log(const ConvexPolygon& k, double tol) {
  auto f = [&](Point2 q) { return mu_log_value(k, q); };
  return finish_minimizer(k, f, minimize_convex_over_polygon(k, f, tol), tol);
}

}  // namespace heartlib
