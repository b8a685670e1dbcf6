#pragma once

#include <optional>
#include <utility>

#include "geometry.hpp"

namespace heartlib {

// canonicalize a vertex sequence: dedupe, force counterclockwise, drop collinear
// midpoints, start at the lexicographic-min vertex; rejects non-convex sequences
ConvexPolygon make_polygon(const std::vector<Point2>& points);

double coordinate_scale(const Chain& chain);
BoundingBox bounding_box(const Chain& chain);

Point2 reflect_point(Point2 p, const FoldAxis& axis);

// clip a (possibly degenerate) chain by one half-plane; eps > 0 keeps points
// within eps outside the boundary, useful when a cut runs along a symmetry line
Chain clip_chain(const Chain& chain, const HalfPlane& hp, double eps = 0.0);

double chain_area(const Chain& chain);
Point2 chain_centroid(const Chain& chain);
double chain_diameter(const Chain& chain);
std::pair<Point2, Point2> chain_diameter_pair(const Chain& chain);

std::pair<double, Point2> area_centroid(const ConvexPolygon& k);
double polygon_area(const ConvexPolygon& k);
Point2 polygon_centroid(const ConvexPolygon& k);
double polygon_diameter(const ConvexPolygon& k);

// cap {x in K : <x,omega> >= lambda}, empty when the fold line clears the body
std::optional<ConvexPolygon> clip_cap(const ConvexPolygon& k, const FoldAxis& axis);
Chain cap_chain(const ConvexPolygon& k, const FoldAxis& axis);

double support(const ConvexPolygon& k, Direction w);
double support(const Chain& chain, Direction w);

std::vector<HalfPlane> edge_planes(const ConvexPolygon& k);
bool contains_point(const std::vector<HalfPlane>& planes, Point2 p, double tol);
bool contains_point(const ConvexPolygon& k, Point2 p, double tol);
bool contains_polygon(const ConvexPolygon& outer, const Chain& inner, double tol);

// 0 for points inside the convex region spanned by the chain
double distance_to_chain(const Chain& chain, Point2 p);
double point_segment_distance(Point2 p, Point2 a, Point2 b);
double hausdorff_distance(const Chain& a, const Chain& b);

// interior distance to the boundary (min edge-plane clearance); negative outside
double boundary_clearance(const std::vector<HalfPlane>& planes, Point2 p);

struct RegionSummary {
  RegionKind kind = RegionKind::polygon;
  Point2 representative;  // the point / segment midpoint / area centroid
  double area = 0.0;
  double diameter = 0.0;
};

// point if diameter < 10 tol, segment if area < 10 tol * diameter, else polygon
RegionSummary classify_chain(const Chain& chain, double tol);

}  // namespace heartlib
