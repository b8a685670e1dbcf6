#include "enclosing_disk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polygon.hpp"

namespace heartlib {

namespace {

bool in_disk(const Disk& d, Point2 p, double eps) {
  return dist(p, d.center) <= d.radius + eps;
}

Disk disk_two(Point2 a, Point2 b) {
  Point2 c = 0.5 * (a + b);
  return {c, 0.5 * dist(a, b)};
}

Disk circumdisk(Point2 a, Point2 b, Point2 c) {
  Point2 ab = b - a, ac = c - a;
  double d = 2.0 * cross(ab, ac);
  double s = std::max({norm(ab), norm(ac), 1e-300});
  if (std::fabs(d) <= 1e-14 * s * s) {
    // nearly collinear: fall back to the widest pair
    Disk dd = disk_two(a, b);
    Disk dc = disk_two(a, c);
    Disk db = disk_two(b, c);
    Disk best = dd;
    if (dc.radius > best.radius) best = dc;
    if (db.radius > best.radius) best = db;
    return best;
  }
  double n_ab = norm2(ab), n_ac = norm2(ac);
  Point2 center{a.x + (ac.y * n_ab - ab.y * n_ac) / d, a.y + (ab.x * n_ac - ac.x * n_ab) / d};
  double r = std::max({dist(center, a), dist(center, b), dist(center, c)});
  return {center, r};
}

}  // namespace

Disk min_enclosing_disk_points(const std::vector<Point2>& pts) {
  if (pts.empty()) fail(errc::invalid_argument, "enclosing disk of no points");
  std::vector<Point2> p = pts;
  std::mt19937_64 rng(0x853c49e6748fea9bULL);  // fixed seed keeps the result deterministic
  std::shuffle(p.begin(), p.end(), rng);

  double scale = coordinate_scale(p);
  double eps = 1e-12 * scale;

  Disk d{p[0], 0.0};
  for (size_t i = 1; i < p.size(); ++i) {
    if (in_disk(d, p[i], eps)) continue;
    d = {p[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (in_disk(d, p[j], eps)) continue;
      d = disk_two(p[i], p[j]);
      for (size_t k = 0; k < j; ++k) {
        if (in_disk(d, p[k], eps)) continue;
        d = circumdisk(p[i], p[j], p[k]);
      }
    }
  }
  return d;
}

Disk min_enclosing_disk(const ConvexPolygon& k) {
  return min_enclosing_disk_points(k.vertices);
}

}  // namespace heartlib
