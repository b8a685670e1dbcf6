#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "polygon.hpp"

namespace testutil {

using namespace heartlib;

inline constexpr double kTau = 2.0 * std::numbers::pi;

inline Chain convex_hull(Chain pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  if (pts.size() < 3) return pts;
  Chain hull(2 * pts.size());
  size_t m = 0;
  for (const auto& p : pts) {
    while (m >= 2 && cross(hull[m - 1] - hull[m - 2], p - hull[m - 2]) <= 0) --m;
    hull[m++] = p;
  }
  const size_t lower = m + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (m >= lower && cross(hull[m - 1] - hull[m - 2], *it - hull[m - 2]) <= 0) --m;
    hull[m++] = *it;
  }
  hull.resize(m - 1);
  return hull;
}

// convex polygon from angle-sorted edge vectors that sum to zero
inline ConvexPolygon random_polygon(std::mt19937_64& rng, int min_v = 5,
                                    int max_v = 12) {
  std::uniform_int_distribution<int> nv(min_v, max_v);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const int n = nv(rng);
    std::vector<Point2> e(n);
    Point2 mean{0, 0};
    for (auto& v : e) {
      const double a = kTau * u(rng);
      const double r = 0.3 + u(rng);
      v = {r * std::cos(a), r * std::sin(a)};
      mean = mean + v;
    }
    mean = (1.0 / n) * mean;
    for (auto& v : e) v = v - mean;
    std::sort(e.begin(), e.end(), [](const Point2& a, const Point2& b) {
      return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    const double s = 0.5 + 3.0 * u(rng);
    Point2 at{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0};
    Chain pts;
    for (const auto& v : e) {
      pts.push_back(at);
      at = at + s * v;
    }
    try {
      ConvexPolygon k = make_polygon(pts);
      if (static_cast<int>(k.vertices.size()) >= min_v) return k;
    } catch (const geometry_error&) {
    }
  }
}

inline std::array<Point2, 3> random_acute_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double a = 0.6 + 0.9 * u(rng);
    const double b = 0.6 + 0.9 * u(rng);
    const double c = std::numbers::pi - a - b;
    if (c < 0.6 || c > 1.5) continue;
    const double len = 1.0 + 2.0 * u(rng);
    const double ta = std::tan(a);
    const double tb = std::tan(b);
    const double cx = len * tb / (ta + tb);
    return {Point2{0, 0}, Point2{len, 0}, Point2{cx, cx * ta}};
  }
}

inline std::array<Point2, 3> random_scalene_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (;;) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const double ab = dist(a, b), bc = dist(b, c), ca = dist(c, a);
    const double mx = std::max({ab, bc, ca});
    if (std::fabs(cross(b - a, c - a)) < 0.5) continue;
    if (std::min({ab, bc, ca}) < 0.4) continue;
    if (std::fabs(ab - bc) < 0.08 * mx || std::fabs(bc - ca) < 0.08 * mx ||
        std::fabs(ab - ca) < 0.08 * mx) {
      continue;
    }
    return {a, b, c};
  }
}

// symmetry axis angle on the 720-direction grid, so the folding profile
// samples the axis normal exactly
inline std::array<Point2, 3> random_isosceles_triangle(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ki(0, 719);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double th = kTau * ki(rng) / 720.0;
  const Point2 ax{std::cos(th), std::sin(th)};
  const Point2 nr{-std::sin(th), std::cos(th)};
  const Point2 c{2 * u(rng) - 1, 2 * u(rng) - 1};
  const double apex = 0.8 + 1.5 * u(rng);
  const double back = 0.4 + 0.8 * u(rng);
  const double w = 0.4 + 1.2 * u(rng);
  return {c + apex * ax, c + (-back) * ax + w * nr, c + (-back) * ax + (-w) * nr};
}

inline ConvexPolygon random_symmetric_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ki(0, 719);
  std::uniform_int_distribution<int> np(2, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    const double th = kTau * ki(rng) / 720.0;
    const Point2 ax{std::cos(th), std::sin(th)};
    const Point2 nr{-std::sin(th), std::cos(th)};
    const Point2 c{2 * u(rng) - 1, 2 * u(rng) - 1};
    Chain pts;
    pts.push_back(c + (1.0 + u(rng)) * ax);
    pts.push_back(c + (-(1.0 + u(rng))) * ax);
    const int m = np(rng);
    for (int i = 0; i < m; ++i) {
      const double s = 2.4 * u(rng) - 1.2;
      const double t = 0.3 + 1.2 * u(rng);
      pts.push_back(c + s * ax + t * nr);
      pts.push_back(c + s * ax + (-t) * nr);
    }
    try {
      ConvexPolygon k = make_polygon(convex_hull(pts));
      if (k.vertices.size() >= 5) return k;
    } catch (const geometry_error&) {
    }
  }
}

}  // namespace testutil
