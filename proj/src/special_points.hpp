#pragma once

#include <string>
#include <vector>

#include "heart_region.hpp"

namespace heartlib {

struct NamedPoint {
  std::string name;
  Point2 xy;
  double value = 0.0;
  bool in_heart = false;
};

// centroid, circumcenter, Chebyshev-set centroid, the standard moment
// minimizers, and the Fraenkel center, each tagged with heart membership;
// extra_p > 0 appends one more mu_p minimizer
std::vector<NamedPoint> compute_special_points(const ConvexPolygon& k,
                                               const HeartResult& heart,
                                               double tol, double extra_p = 0.0);

}  // namespace heartlib
