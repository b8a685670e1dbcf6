#include "heart_region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebyshev.hpp"
#include "enclosing_disk.hpp"

namespace heartlib {

namespace {
constexpr double kPi = std::numbers::pi;

int dimension_from(double heart_diameter, double heart_area, double dim_tol) {
  if (heart_diameter < dim_tol) return 0;
  if (heart_area < dim_tol * heart_diameter) return 1;
  return 2;
}
}  // namespace

HeartResult build_heart(const ConvexPolygon& k, int n_directions, double tol, bool refine) {
  if (n_directions < 8) fail(errc::invalid_argument, "heart needs at least 8 directions");
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");

  FoldingProfile prof = folding_profile(k, n_directions, tol);

  Chain chain = k.vertices;
  // clip with a tol margin: symmetric directions pin an exact zero-width
  // strip through the centroid, and margin-free cuts can starve it to
  // nothing through rounding alone
  auto cut = [&](const FoldingSample& s) {
    chain = clip_chain(chain, HalfPlane{vec(s.omega), s.r_value}, tol);
    if (chain.empty())
      fail(errc::internal_error, "heart clipped to empty although the centroid is always inside");
  };
  for (const auto& s : prof.samples) cut(s);

  int used = n_directions;
  if (refine) {
    size_t n = prof.samples.size();
    std::vector<std::pair<double, size_t>> jumps(n);
    for (size_t i = 0; i < n; ++i)
      jumps[i] = {std::fabs(prof.samples[(i + 1) % n].r_value - prof.samples[i].r_value), i};
    std::sort(jumps.begin(), jumps.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    double dth = 2.0 * kPi / n_directions;
    for (size_t j = 0; j < std::min<size_t>(8, jumps.size()); ++j) {
      double base = prof.samples[jumps[j].second].angle;
      for (double frac : {1.0 / 3.0, 2.0 / 3.0}) {
        FoldingSample s = maximal_folding(k, direction_from_angle(base + frac * dth), tol);
        cut(s);
        ++used;
      }
    }
  }

  RegionSummary s = classify_chain(chain, tol);
  HeartResult h;
  h.region = std::move(chain);
  h.kind = s.kind;
  h.representative = s.representative;
  h.area = s.area;
  h.diameter = s.diameter;
  h.dim_tol = 100.0 * tol * polygon_diameter(k);
  h.dimension = dimension_from(h.diameter, h.area, h.dim_tol);
  h.n_directions = used;
  h.tol = tol;
  return h;
}

int heart_dimension(const HeartResult& h) {
  return dimension_from(h.diameter, h.area, h.dim_tol);
}

double diameter_lower_bound(const ConvexPolygon& k) {
  Point2 m = polygon_centroid(k);
  Point2 c = min_enclosing_disk(k).center;
  Point2 i = chebyshev_set(k, default_tolerance(k)).center;
  return std::max({dist(m, c), dist(c, i), dist(i, m)});
}

bool heart_contains(const HeartResult& h, Point2 p, double slack) {
  return distance_to_chain(h.region, p) <= slack;
}

}  // namespace heartlib
