#pragma once

#include "polygon.hpp"

namespace heartlib {

struct FoldingSample {
  Direction omega;
  double angle = 0.0;  // radians, set to the exact grid angle by folding_profile
  double r_value = 0.0;
  double bracket_width = 0.0;
  bool admissible_at_r_plus = false;
};

struct FoldingProfile {
  double tol = 0.0;
  std::vector<FoldingSample> samples;
};

double default_tolerance(const ConvexPolygon& k);  // 1e-9 * diameter(K)

// true iff reflecting the cap {<x,omega> >= lambda} across the fold line stays in K (slack tol)
bool is_admissible_fold(const ConvexPolygon& k, const FoldAxis& axis, double tol);

// smallest admissible fold level, bisected over [<M_K,omega>, support(K,omega)];
// a 64-point pre-scan guards the monotonicity assumption, with a 4096-point
// fallback taking the minimum admissible level when the pre-scan is inconsistent
FoldingSample maximal_folding(const ConvexPolygon& k, Direction omega, double tol);

FoldingProfile folding_profile(const ConvexPolygon& k, int n_directions, double tol);

// true iff K is mirror-symmetric about the line through M_K orthogonal to omega
bool detect_symmetry(const ConvexPolygon& k, Direction omega, double tol);

}  // namespace heartlib
