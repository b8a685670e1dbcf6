#include "special_points.hpp"

#include <cmath>

#include "chebyshev.hpp"
#include "enclosing_disk.hpp"
#include "fraenkel.hpp"
#include "moments.hpp"

namespace heartlib {

std::vector<NamedPoint> compute_special_points(const ConvexPolygon& k,
                                               const HeartResult& heart,
                                               double tol, double extra_p) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tol must be positive");
  std::vector<NamedPoint> out;
  const double slack = 10.0 * tol;
  auto push = [&](std::string name, Point2 p, double value) {
    NamedPoint np;
    np.name = std::move(name);
    np.xy = p;
    np.value = value;
    np.in_heart = heart_contains(heart, p, slack);
    out.push_back(std::move(np));
  };

  push("M_K", polygon_centroid(k), polygon_area(k));
  const Disk disk = min_enclosing_disk(k);
  push("C_K", disk.center, disk.radius);
  const ChebyshevSet cheb = chebyshev_set(k, tol);
  push("I_M", cheb.center, cheb.inradius);

  for (double p : {0.5, 1.0, 2.0, 5.0, 50.0}) {
    const MinimizerResult r = minimize_mu_p(k, p, tol);
    char name[32];
    std::snprintf(name, sizeof name, "mu_%g", p);
    push(name, r.point, r.value);
  }
  {
    const MinimizerResult r = minimize_mu_log(k, tol);
    push("mu_log", r.point, r.value);
  }
  for (double p : {3.0, 6.0, 40.0}) {
    const MinimizerResult r = minimize_nu_p(k, p, tol);
    char name[32];
    std::snprintf(name, sizeof name, "nu_%g", p);
    push(name, r.point, r.value);
  }
  {
    const FraenkelResult f = fraenkel_asymmetry(k, tol);
    push("fraenkel", f.center, f.asymmetry);
  }
  if (extra_p > 0.0) {
    const MinimizerResult r = minimize_mu_p(k, extra_p, tol);
    char name[32];
    std::snprintf(name, sizeof name, "mu_%g", extra_p);
    push(name, r.point, r.value);
  }
  return out;
}

}  // namespace heartlib
