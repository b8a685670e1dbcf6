#include "fraenkel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moments.hpp"

namespace heartlib {

namespace {
constexpr double kPi = std::numbers::pi;

// signed area of the triangle (0, a, b) clipped to the disk of radius r at 0
double circle_triangle_area(Point2 a, Point2 b, double r) {
  double eps = 1e-12 * r;
  bool ain = norm(a) <= r + eps;
  bool bin = norm(b) <= r + eps;
  auto tri = [](Point2 u, Point2 v) { return 0.5 * cross(u, v); };
  auto sector = [&](Point2 u, Point2 v) { return 0.5 * r * r * std::atan2(cross(u, v), dot(u, v)); };

  if (ain && bin) return tri(a, b);

  Point2 e = b - a;
  double qa = norm2(e);
  double qb = 2.0 * dot(a, e);
  double qc = norm2(a) - r * r;
  double disc = qb * qb - 4.0 * qa * qc;

  if (ain) {  // leaves the disk once
    double t = (-qb + std::sqrt(std::max(0.0, disc))) / (2.0 * qa);
    Point2 p = a + t * e;
    return tri(a, p) + sector(p, b);
  }
  if (bin) {  // enters the disk once
    double t = (-qb - std::sqrt(std::max(0.0, disc))) / (2.0 * qa);
    Point2 p = a + t * e;
    return sector(a, p) + tri(p, b);
  }
  if (disc > 0.0 && qa > 0.0) {  // may dip through the disk
    double sq = std::sqrt(disc);
    double t1 = (-qb - sq) / (2.0 * qa);
    double t2 = (-qb + sq) / (2.0 * qa);
    if (t1 > 0.0 && t2 < 1.0 && t1 < t2) {
      Point2 p1 = a + t1 * e;
      Point2 p2 = a + t2 * e;
      return sector(a, p1) + tri(p1, p2) + sector(p2, b);
    }
  }
  return sector(a, b);
}

}  // namespace

double clipped_disk_area(const ConvexPolygon& k, Point2 x, double r) {
  if (!(r > 0.0)) fail(errc::invalid_argument, "disk radius must be positive");
  double total = 0.0;
  for (size_t i = 0; i < k.vertices.size(); ++i) {
    Point2 a = k.vertices[i] - x;
    Point2 b = k.vertices[(i + 1) % k.vertices.size()] - x;
    total += circle_triangle_area(a, b, r);
  }
  return std::clamp(total, 0.0, std::min(polygon_area(k), kPi * r * r));
}

FraenkelResult fraenkel_asymmetry(const ConvexPolygon& k, double tol, double r_override) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");
  double area = polygon_area(k);
  double r = r_override > 0.0 ? r_override : std::sqrt(area / kPi);

  auto gamma = [&](Point2 q) { return clipped_disk_area(k, q, r); };
  auto objective = [&](Point2 q) { return -std::log(std::max(gamma(q), 1e-300)); };
  InteriorSearch s = minimize_convex_over_polygon(k, objective, tol);

  FraenkelResult out;
  out.r_star = r;
  out.center = s.point;
  out.gamma_max = gamma(s.point);
  out.asymmetry = 2.0 * (1.0 - out.gamma_max / area);

  // flat when gamma stays put along some opposite pair of probes (ridge of maximizers)
  double diam = polygon_diameter(k);
  double h = std::max(1e-3 * diam, 100.0 * tol);
  double threshold = tol * diam;
  for (int d = 0; d < 4 && !out.flat_flag; ++d) {
    double theta = kPi * d / 4.0;
    Point2 step{h * std::cos(theta), h * std::sin(theta)};
    double up = gamma(s.point + step);
    double dn = gamma(s.point - step);
    if (std::fabs(up - out.gamma_max) < threshold && std::fabs(dn - out.gamma_max) < threshold)
      out.flat_flag = true;
  }
  return out;
}

}  // namespace heartlib
