#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "parallel.hpp"

namespace heartlib {

namespace {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4b5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

double predicate_scan_folding(const ConvexPolygon& k, Direction omega, int n_steps) {
  if (n_steps < 100) fail(errc::invalid_argument, "scan needs at least 100 steps");
  const Point2 w = vec(omega);
  const double lo0 = dot(polygon_centroid(k), w);
  const double hi = support(k, omega);
  const double diam = polygon_diameter(k);
  const double span = hi - lo0;
  const double delta = span > 1e-12 * diam ? 0.05 * span : 0.05 * diam;
  const double lo = lo0 - delta;
  const double tol = default_tolerance(k);
  auto adm = [&](double lambda) { return is_admissible_fold(k, FoldAxis{omega, lambda}, tol); };

  const double pitch = (hi - lo) / (n_steps - 1);
  int first = -1;
  for (int i = 0; i < n_steps; ++i) {
    if (adm(lo + pitch * i)) {
      first = i;
      break;
    }
  }
  if (first < 0) return hi;  // the top slice always folds into itself
  const double grid_value = lo + pitch * first;
  if (first == 0) return grid_value;

  // refine inside the flip bracket; the predicate must stay two-sided monotone
  double a = grid_value - pitch;
  double b = grid_value;
  const double fine = pitch / 1024.0;
  while (b - a > fine) {
    const double mid = 0.5 * (a + b);
    if (adm(mid)) {
      b = mid;
    } else {
      a = mid;
    }
  }
  for (int j = 1; j <= 8; ++j) {
    const double probe = b + (grid_value - b) * j / 9.0;
    if (!adm(probe)) {
      fail(errc::internal_error, "fold predicate flipped back above its threshold");
    }
  }
  return grid_value;
}

std::vector<Point2> grid_heart_oracle(const ConvexPolygon& k, int grid_res, int n_dirs) {
  if (grid_res < 32) fail(errc::invalid_argument, "grid needs at least 32 cells per side");
  const FoldingProfile prof = folding_profile(k, n_dirs, default_tolerance(k));
  const BoundingBox box = bounding_box(k.vertices);
  const double cw = box.width() / grid_res;
  const double ch = box.height() / grid_res;
  const double slack = 0.5 * std::sqrt(cw * cw + ch * ch) * (1.0 + 1e-9);
  const auto planes = edge_planes(k);

  std::vector<Point2> pts;
  for (int i = 0; i < grid_res; ++i) {
    for (int j = 0; j < grid_res; ++j) {
      const Point2 x{box.xmin + (i + 0.5) * cw, box.ymin + (j + 0.5) * ch};
      if (!contains_point(planes, x, slack)) continue;
      bool ok = true;
      for (const auto& s : prof.samples) {
        if (dot(x, vec(s.omega)) > s.r_value + slack) {
          ok = false;
          break;
        }
      }
      if (ok) pts.push_back(x);
    }
  }
  return pts;
}

McEstimate mc_moment(const ConvexPolygon& k, Point2 x, const MomentSpec& spec,
                     long n_samples, unsigned long long seed) {
  if (n_samples < 10000) fail(errc::invalid_argument, "need at least 1e4 samples");
  if (!std::isfinite(x.x) || !std::isfinite(x.y)) {
    fail(errc::invalid_argument, "base point must be finite");
  }
  constexpr long kBatch = 65536;
  const long n_batches = (n_samples + kBatch - 1) / kBatch;
  std::vector<double> sums(static_cast<size_t>(n_batches), 0.0);
  std::vector<double> sqsums(static_cast<size_t>(n_batches), 0.0);

  const auto planes = edge_planes(k);
  const BoundingBox box = bounding_box(k.vertices);

  if (spec.kind == MomentKind::inverse_p) {
    if (!(spec.p > 2.0)) fail(errc::invalid_argument, "inverse moment needs p > 2");
    const double clearance = boundary_clearance(planes, x);
    if (clearance <= default_tolerance(k)) {
      fail(errc::point_too_close_to_boundary, "base point must be interior");
    }
    const double r_min = 0.5 * clearance;
    const double p = spec.p;
    const double w_total =
        2.0 * std::acos(-1.0) * std::pow(r_min, 2.0 - p) / (p - 2.0);
    parallel_for(static_cast<size_t>(n_batches), [&](size_t b) {
      std::mt19937_64 rng(mix64(seed + 0x100000001b3ULL * (b + 1)));
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      const long count =
          std::min<long>(kBatch, n_samples - static_cast<long>(b) * kBatch);
      long hits = 0;
      for (long i = 0; i < count; ++i) {
        const double u = 1.0 - uni(rng);  // (0, 1], keeps the radius finite
        const double r = r_min * std::pow(u, -1.0 / (p - 2.0));
        const double th = 2.0 * std::acos(-1.0) * uni(rng);
        const Point2 y{x.x + r * std::cos(th), x.y + r * std::sin(th)};
        if (!contains_point(planes, y, 0.0)) ++hits;
      }
      sums[b] = static_cast<double>(hits);
    });
    double hits = 0.0;
    for (double s : sums) hits += s;
    const double n = static_cast<double>(n_samples);
    const double phat = hits / n;
    McEstimate out;
    out.estimate = w_total * phat;
    out.std_error = w_total * std::sqrt(std::max(phat * (1.0 - phat), 0.0) / n);
    return out;
  }

  if (spec.kind == MomentKind::power_p && !(spec.p > 0.0)) {
    fail(errc::invalid_argument, "power moment needs p > 0");
  }
  const double box_area = box.width() * box.height();
  parallel_for(static_cast<size_t>(n_batches), [&](size_t b) {
    std::mt19937_64 rng(mix64(seed + 0x100000001b3ULL * (b + 1)));
    std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
    std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
    const long count =
        std::min<long>(kBatch, n_samples - static_cast<long>(b) * kBatch);
    double s = 0.0, s2 = 0.0;
    for (long i = 0; i < count; ++i) {
      const Point2 y{ux(rng), uy(rng)};
      double f = 0.0;
      if (contains_point(planes, y, 0.0)) {
        const double d2 = norm2(y - x);
        if (spec.kind == MomentKind::power_p) {
          f = std::pow(d2, 0.5 * spec.p);
        } else {
          f = d2 > 0.0 ? 0.5 * std::log(d2) : 0.0;
        }
      }
      s += f;
      s2 += f * f;
    }
    sums[b] = s;
    sqsums[b] = s2;
  });
  double s = 0.0, s2 = 0.0;
  for (long b = 0; b < n_batches; ++b) {
    s += sums[static_cast<size_t>(b)];
    s2 += sqsums[static_cast<size_t>(b)];
  }
  const double n = static_cast<double>(n_samples);
  const double mean = s / n;
  const double var = std::max(s2 / n - mean * mean, 0.0);
  McEstimate out;
  out.estimate = box_area * mean;
  out.std_error = box_area * std::sqrt(var / n);
  return out;
}

}  // namespace heartlib
