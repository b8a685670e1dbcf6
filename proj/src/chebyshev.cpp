#include "chebyshev.hpp"

#include <cmath>

#include "enclosing_disk.hpp"

namespace heartlib {

Chain inner_parallel_chain(const ConvexPolygon& k, double r) {
  Chain chain = k.vertices;
  for (const auto& hp : edge_planes(k)) {
    chain = clip_chain(chain, HalfPlane{hp.n, hp.c - r});
    if (chain.empty()) return chain;
  }
  return chain;
}

ChebyshevSet chebyshev_set(const ConvexPolygon& k, double tol) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");

  double lo = 0.0;
  double hi = min_enclosing_disk(k).radius;

  // bisect well below tol so the reported kernel sits within tol of the true set
  double step_tol = tol / 64.0;
  while (hi - lo > step_tol) {
    double mid = 0.5 * (lo + hi);
    if (inner_parallel_chain(k, mid).empty())
      hi = mid;
    else
      lo = mid;
  }

  ChebyshevSet result;
  result.inradius = lo;
  result.kernel = inner_parallel_chain(k, lo);
  if (result.kernel.empty()) fail(errc::internal_error, "kernel empty at feasible radius");

  RegionSummary s = classify_chain(result.kernel, tol);
  result.kind = s.kind;
  result.center = s.representative;
  return result;
}

}  // namespace heartlib
