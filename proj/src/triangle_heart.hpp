#pragma once

#include "polygon.hpp"

namespace heartlib {

// vertices relabeled so |AB| is the smallest side with the larger base angle at
// B, and (b,h,t) the frame coordinates: A at origin, B=(b,0), C=(t,h)
struct TriangleGeometry {
  Point2 A, B, C;
  double b = 0.0, h = 0.0, t = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;  // interior angles at A, B, C
};

enum class TriangleKind { acute, right, obtuse };

enum class TriangleHeartKind {
  acute_quadrangle,
  obtuse_pentagon,
  obtuse_quadrangle,
  degenerate_symmetric,
};

struct TriangleHeartExact {
  Chain polygon;  // counterclockwise, in the input triangle's coordinates
  RegionKind region_kind = RegionKind::polygon;
  Point2 representative;
  double area = 0.0;
  TriangleHeartKind kind = TriangleHeartKind::acute_quadrangle;
};

struct TriangleAreas {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
  double delh = 0.0;
  double heart_area = 0.0;
  double ratio = 0.0;       // heart_area / triangle area
  double delh_ratio = 0.0;  // delh / triangle area
};

struct SweepRow {
  double t = 0.0;
  double ratio = 0.0;
  double delh_ratio = 0.0;
};

TriangleGeometry make_triangle(Point2 a, Point2 b, Point2 c);
TriangleGeometry make_triangle(double b, double h, double t);

TriangleKind classify_triangle(const TriangleGeometry& tri);

// clip the triangle by the bisectors of its smallest/largest angles and the
// perpendicular bisectors of its shortest/longest sides; ties clip both sides
TriangleHeartExact exact_triangle_heart(const TriangleGeometry& tri, double tol);

TriangleAreas triangle_area_formulas(double b, double h, double t);

std::vector<SweepRow> obtuse_sweep(double b, double h, const std::vector<double>& t_values);

}  // namespace heartlib
