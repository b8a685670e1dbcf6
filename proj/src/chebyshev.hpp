#pragma once

#include "polygon.hpp"

namespace heartlib {

struct ChebyshevSet {
  double inradius = 0.0;
  Chain kernel;  // deepest-point set, after offsetting every edge inward by inradius
  RegionKind kind = RegionKind::point;
  Point2 center;  // the point itself, or the midpoint / centroid of the set
};

// inradius and the set of incenters via bisection over edge-offset feasibility
ChebyshevSet chebyshev_set(const ConvexPolygon& k, double tol);

// offset every edge plane inward by r and intersect; empty when r exceeds the inradius
Chain inner_parallel_chain(const ConvexPolygon& k, double r);

}  // namespace heartlib
