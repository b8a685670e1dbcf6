#pragma once

#include "polygon.hpp"

namespace heartlib {

struct FraenkelResult {
  double r_star = 0.0;
  Point2 center;
  double gamma_max = 0.0;
  double asymmetry = 0.0;  // in [0, 2)
  bool flat_flag = false;  // gamma constant along some direction at the optimum
};

// exact area of K intersected with the disk of radius r around x
double clipped_disk_area(const ConvexPolygon& k, Point2 x, double r);

// r_override > 0 replaces the area-matching radius (diagnostic use)
FraenkelResult fraenkel_asymmetry(const ConvexPolygon& k, double tol, double r_override = 0.0);

}  // namespace heartlib
