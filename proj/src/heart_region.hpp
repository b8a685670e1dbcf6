#pragma once

#include "folding.hpp"

namespace heartlib {

struct HeartResult {
  Chain region;  // counterclockwise; outer approximation of the heart
  RegionKind kind = RegionKind::polygon;
  Point2 representative;  // the point / segment midpoint / centroid, per kind
  double area = 0.0;
  double diameter = 0.0;
  int dimension = 2;
  double dim_tol = 0.0;
  int n_directions = 0;
  double tol = 0.0;
};

// intersect K with the folding half-planes of an equispaced profile; the
// optional refinement pass adds 2 directions around the 8 largest profile jumps
HeartResult build_heart(const ConvexPolygon& k, int n_directions, double tol, bool refine = false);

int heart_dimension(const HeartResult& h);

// max pairwise distance among centroid, circumcenter and the incenter set's middle
double diameter_lower_bound(const ConvexPolygon& k);

bool heart_contains(const HeartResult& h, Point2 p, double slack);

}  // namespace heartlib
