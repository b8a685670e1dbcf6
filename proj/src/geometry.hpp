#pragma once

#include <cmath>
#include <vector>

#include "errors.hpp"

namespace heartlib {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::sqrt(norm2(p)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// unit vector; the only way code below builds one
struct Direction {
  double ux = 1.0;
  double uy = 0.0;
};

inline Direction make_direction(double x, double y) {
  double n = std::sqrt(x * x + y * y);
  if (!(n > 0.0) || !std::isfinite(n)) fail(errc::invalid_argument, "direction must be a nonzero finite vector");
  return {x / n, y / n};
}

inline Direction direction_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Point2 vec(Direction w) { return {w.ux, w.uy}; }
inline double angle_of(Direction w) { return std::atan2(w.uy, w.ux); }

// fold line {x : <x,omega> = lambda}, fold maps the far side <x,omega> > lambda back across
struct FoldAxis {
  Direction omega;
  double lambda = 0.0;
};

struct Disk {
  Point2 center;
  double radius = 0.0;
};

// closed vertex chain, counterclockwise; may be degenerate (0, 1 or 2 points)
using Chain = std::vector<Point2>;

// counterclockwise, strictly convex, starts at lexicographic-min vertex; built via make_polygon
struct ConvexPolygon {
  Chain vertices;
};

// half-plane {x : <x,n> <= c}
struct HalfPlane {
  Point2 n;
  double c = 0.0;
};

enum class RegionKind { point, segment, polygon };

struct BoundingBox {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

}  // namespace heartlib
