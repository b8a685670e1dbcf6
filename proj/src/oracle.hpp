#pragma once

#include "folding.hpp"
#include "moments.hpp"

namespace heartlib {

// smallest admissible level on an n_steps grid over [<M_K,w> - delta, support];
// bisection inside the flip bracket re-probes the predicate for consistency
double predicate_scan_folding(const ConvexPolygon& k, Direction omega, int n_steps);

// definition-level heart membership at cell centers of a grid_res^2 grid over
// the bounding box; half-cell-diagonal slack so cells touching the region count
std::vector<Point2> grid_heart_oracle(const ConvexPolygon& k, int grid_res, int n_dirs);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

// rejection sampling over the bounding box for mu/log; annulus importance
// sampling of the complement for nu; deterministic under a fixed seed
McEstimate mc_moment(const ConvexPolygon& k, Point2 x, const MomentSpec& spec,
                     long n_samples, unsigned long long seed);

}  // namespace heartlib
