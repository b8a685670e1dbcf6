#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "folding.hpp"
#include "heart_region.hpp"
#include "moments.hpp"
#include "oracle.hpp"
#include "special_points.hpp"

namespace heartlib {

namespace {

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

}  // namespace

VerifyReport verify_body(const ConvexPolygon& k, int n_directions, double tol,
                         unsigned long long seed) {
  if (!(tol > 0.0)) tol = default_tolerance(k);
  VerifyReport rep;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.lines.push_back({std::move(name), pass, std::move(detail)});
    if (!rep.lines.back().pass) ++rep.failures;
  };

  const HeartResult heart = build_heart(k, n_directions, tol);
  const auto points = compute_special_points(k, heart, tol);

  {
    bool ok = true;
    std::string misses;
    for (const auto& p : points) {
      if (p.name != "M_K" && p.name != "C_K" && p.name != "I_M") continue;
      if (!p.in_heart) {
        ok = false;
        misses += " " + p.name;
      }
    }
    add("classical centers in heart", ok,
        ok ? "M_K, C_K, I_M all inside" : "outside:" + misses);
  }

  {
    bool ok = true;
    std::string misses;
    for (const auto& p : points) {
      if (p.name == "M_K" || p.name == "C_K" || p.name == "I_M") continue;
      if (!p.in_heart) {
        ok = false;
        misses += " " + p.name;
      }
    }
    add("moment minimizers in heart", ok,
        ok ? "all minimizers inside" : "outside:" + misses);
  }

  {
    const double bound = diameter_lower_bound(k);
    const bool ok = bound <= heart.diameter + 10.0 * tol;
    add("diameter lower bound", ok,
        fmt("bound %.6g vs heart diameter %.6g", bound, heart.diameter));
  }

  {
    const int n_steps = 400;
    double worst = 0.0;
    bool ok = true;
    for (int j = 0; j < 8; ++j) {
      const Direction omega =
          direction_from_angle(2.0 * std::acos(-1.0) * j / 8.0 + 0.1234);
      const double scan = predicate_scan_folding(k, omega, n_steps);
      const FoldingSample s = maximal_folding(k, omega, tol);
      const double lo0 = dot(polygon_centroid(k), vec(omega));
      const double hi = support(k, omega);
      const double span = hi - lo0;
      const double delta =
          span > 1e-12 * polygon_diameter(k) ? 0.05 * span : 0.05 * polygon_diameter(k);
      const double pitch = (hi - (lo0 - delta)) / (n_steps - 1);
      const double err = std::abs(scan - s.r_value);
      worst = std::max(worst, err - pitch);
      if (err > pitch + tol) ok = false;
    }
    add("folding scan agreement", ok,
        fmt("8 directions, worst excess over pitch %.3g (tol %.3g)", worst, tol));
  }

  {
    const int res = 48;
    const auto cells = grid_heart_oracle(k, res, n_directions);
    const BoundingBox box = bounding_box(k.vertices);
    const double cw = box.width() / res;
    const double ch = box.height() / res;
    const double diag = std::sqrt(cw * cw + ch * ch);
    double worst = 0.0;
    for (const auto& c : cells) {
      worst = std::max(worst, distance_to_chain(heart.region, c));
    }
    bool ok = worst <= 2.0 * diag;
    int eroded = 0, misses = 0;
    if (heart.kind == RegionKind::polygon) {
      const auto region_planes =
          edge_planes(ConvexPolygon{heart.region});
      for (int i = 0; i < res && ok; ++i) {
        for (int j = 0; j < res; ++j) {
          const Point2 x{box.xmin + (i + 0.5) * cw, box.ymin + (j + 0.5) * ch};
          if (boundary_clearance(region_planes, x) < diag) continue;
          ++eroded;
          if (std::find_if(cells.begin(), cells.end(), [&](const Point2& c) {
                return dist(c, x) < 1e-9 * diag;
              }) == cells.end()) {
            ++misses;
            ok = false;
          }
        }
      }
    }
    add("grid oracle agreement", ok,
        fmt("max cell deviation %.3g vs cell diagonal %.3g", worst, diag) +
            (misses ? " and deep cells missing from oracle" : ""));
    (void)eroded;
  }

  {
    MomentSpec mu2;
    mu2.kind = MomentKind::power_p;
    mu2.p = 2.0;
    const double d = polygon_diameter(k);
    const Point2 m = polygon_centroid(k);
    const Point2 x0{m.x + 0.07 * d, m.y + 0.02 * d};
    const double q_mu = mu_p_value(k, x0, 2.0, 20);
    const McEstimate mc_mu = mc_moment(k, x0, mu2, 200000, seed);
    MomentSpec nu4;
    nu4.kind = MomentKind::inverse_p;
    nu4.p = 4.0;
    const double q_nu = nu_p_value(k, m, 4.0, 20);
    const McEstimate mc_nu = mc_moment(k, m, nu4, 200000, seed + 1);
    const bool ok_mu = std::abs(q_mu - mc_mu.estimate) <= 4.0 * mc_mu.std_error;
    const bool ok_nu = std::abs(q_nu - mc_nu.estimate) <= 4.0 * mc_nu.std_error;
    add("quadrature vs Monte Carlo", ok_mu && ok_nu,
        fmt("mu_2 gap %.3g (4se %.3g)", std::abs(q_mu - mc_mu.estimate),
            4.0 * mc_mu.std_error) +
            fmt(", nu_4 gap %.3g (4se %.3g)", std::abs(q_nu - mc_nu.estimate),
                4.0 * mc_nu.std_error));
  }

  {
    const HeartResult fine = build_heart(k, 2 * n_directions, tol);
    const bool ok = fine.area <= heart.area + tol * polygon_diameter(k);
    add("heart area convergence", ok,
        fmt("area %.9g at n and %.9g at 2n", heart.area, fine.area));
  }

  for (const auto& line : rep.lines) {
    rep.text += line.pass ? "PASS  " : "FAIL  ";
    rep.text += line.name + ": " + line.detail + "\n";
  }
  return rep;
}

}  // namespace heartlib
