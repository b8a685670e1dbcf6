#include "folding.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "parallel.hpp"

namespace heartlib {

namespace {
constexpr double kPi = std::numbers::pi;

bool reflected_cap_inside(const std::vector<HalfPlane>& planes, const Chain& body,
                          Direction omega, double lambda, double tol) {
  Point2 w = vec(omega);
  Chain cap = clip_chain(body, HalfPlane{{-w.x, -w.y}, -lambda});
  for (const auto& p : cap) {
    Point2 r = p + (2.0 * (lambda - dot(p, w))) * w;
    if (!contains_point(planes, r, tol)) return false;
  }
  return true;
}

}  // namespace

double default_tolerance(const ConvexPolygon& k) { return 1e-9 * polygon_diameter(k); }

bool is_admissible_fold(const ConvexPolygon& k, const FoldAxis& axis, double tol) {
  return reflected_cap_inside(edge_planes(k), k.vertices, axis.omega, axis.lambda, tol);
}

FoldingSample maximal_folding(const ConvexPolygon& k, Direction omega, double tol) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");

  auto planes = edge_planes(k);
  auto admissible = [&](double lambda) {
    return reflected_cap_inside(planes, k.vertices, omega, lambda, tol);
  };

  double lo = dot(polygon_centroid(k), vec(omega));
  double hi = support(k, omega);

  FoldingSample out;
  out.omega = omega;
  out.angle = angle_of(omega);
  out.admissible_at_r_plus = true;

  // Prop-2.2 floor: admissible at the centroid level means the direction is symmetric
  if (admissible(lo)) {
    out.r_value = lo;
    out.bracket_width = 0.0;
    return out;
  }
  if (hi - lo <= tol) {
    out.r_value = hi;
    out.bracket_width = hi - lo;
    return out;
  }

  // scan a grid, expecting false...false,true...true; returns the flip bracket
  auto scan = [&](int steps, double& blo, double& bhi, bool& consistent) {
    consistent = true;
    int first_true = -1;
    std::vector<char> adm(static_cast<size_t>(steps));
    adm[0] = 0;  // admissible(lo) already known false
    for (int i = 1; i < steps; ++i) {
      double lambda = lo + (hi - lo) * i / (steps - 1);
      adm[static_cast<size_t>(i)] = admissible(lambda) ? 1 : 0;
      if (adm[static_cast<size_t>(i)] && first_true < 0) first_true = i;
    }
    if (first_true < 0) {
      blo = hi;
      bhi = hi;
      return;
    }
    for (int i = first_true; i < steps; ++i)
      if (!adm[static_cast<size_t>(i)]) consistent = false;
    blo = lo + (hi - lo) * (first_true - 1) / (steps - 1);
    bhi = lo + (hi - lo) * first_true / (steps - 1);
  };

  double blo = lo, bhi = hi;
  bool consistent = true;
  scan(64, blo, bhi, consistent);
  if (!consistent) {
    // fallback: minimum admissible level over a dense scan, then local bisection
    int steps = 4096;
    int first_true = -1;
    for (int i = 1; i < steps && first_true < 0; ++i) {
      double lambda = lo + (hi - lo) * i / (steps - 1);
      if (admissible(lambda)) first_true = i;
    }
    if (first_true < 0)
      fail(errc::monotonicity_violation, "no admissible fold level found below the support value");
    blo = lo + (hi - lo) * (first_true - 1) / (steps - 1);
    bhi = lo + (hi - lo) * first_true / (steps - 1);
  }

  while (bhi - blo > tol) {
    double mid = 0.5 * (blo + bhi);
    if (admissible(mid))
      bhi = mid;
    else
      blo = mid;
  }
  out.r_value = bhi;  // the admissible end, so folding at r_value is certified
  out.bracket_width = bhi - blo;
  return out;
}

FoldingProfile folding_profile(const ConvexPolygon& k, int n_directions, double tol) {
  if (n_directions < 4) fail(errc::invalid_argument, "profile needs at least 4 directions");
  FoldingProfile prof;
  prof.tol = tol;
  prof.samples.resize(static_cast<size_t>(n_directions));
  parallel_for(static_cast<size_t>(n_directions), [&](size_t i) {
    double theta = 2.0 * kPi * static_cast<double>(i) / n_directions;
    FoldingSample s = maximal_folding(k, direction_from_angle(theta), tol);
    s.angle = theta;
    prof.samples[i] = s;
  });
  return prof;
}

bool detect_symmetry(const ConvexPolygon& k, Direction omega, double tol) {
  FoldAxis axis{omega, dot(polygon_centroid(k), vec(omega))};
  auto planes = edge_planes(k);
  for (const auto& p : k.vertices)
    if (!contains_point(planes, reflect_point(p, axis), tol)) return false;
  return true;
}

}  // namespace heartlib
