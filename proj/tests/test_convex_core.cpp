#include <doctest.h>

#include <cmath>

#include "chebyshev.hpp"
#include "enclosing_disk.hpp"
#include "test_util.hpp"

using namespace heartlib;
using doctest::Approx;

TEST_CASE("make_polygon canonicalizes orientation and start vertex") {
  const ConvexPolygon k = make_polygon({{1, 1}, {1, 0}, {0, 0}, {0, 1}});
  REQUIRE(k.vertices.size() == 4);
  CHECK(k.vertices[0].x == 0.0);
  CHECK(k.vertices[0].y == 0.0);
  CHECK(k.vertices[1].x == 1.0);
  CHECK(k.vertices[1].y == 0.0);
  CHECK(chain_area(k.vertices) == Approx(1.0));
}

TEST_CASE("make_polygon drops duplicates and collinear midpoints") {
  const ConvexPolygon k =
      make_polygon({{0, 0}, {0.5, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(k.vertices.size() == 4);
}

TEST_CASE("make_polygon error codes") {
  try {
    make_polygon({{0, 0}, {1, 0}});
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::too_few_vertices);
  }
  try {
    make_polygon({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::not_convex);
  }
  try {
    make_polygon({{0, 0}, {1, 0}, {2, 0}});
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::degenerate);
  }
  const double inf = std::numeric_limits<double>::infinity();
  try {
    make_polygon({{0, 0}, {1, 0}, {inf, 1}});
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
}

TEST_CASE("area, centroid and diameter of simple bodies") {
  const ConvexPolygon sq = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(polygon_area(sq) == Approx(1.0));
  CHECK(polygon_centroid(sq).x == Approx(0.5));
  CHECK(polygon_centroid(sq).y == Approx(0.5));
  CHECK(polygon_diameter(sq) == Approx(std::sqrt(2.0)));

  const ConvexPolygon tri = make_polygon({{0, 0}, {4, 0}, {0, 3}});
  CHECK(polygon_area(tri) == Approx(6.0));
  CHECK(polygon_centroid(tri).x == Approx(4.0 / 3.0));
  CHECK(polygon_centroid(tri).y == Approx(1.0));
  CHECK(polygon_diameter(tri) == Approx(5.0));
}

TEST_CASE("support function and caps") {
  const ConvexPolygon sq = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(support(sq, make_direction(1, 0)) == Approx(1.0));
  CHECK(support(sq, make_direction(-1, 0)) == Approx(0.0));
  CHECK(support(sq, make_direction(1, 1)) == Approx(std::sqrt(2.0)));

  const Chain cap = cap_chain(sq, {make_direction(1, 0), 0.3});
  CHECK(chain_area(cap) == Approx(0.7));
  const Chain empty_cap = cap_chain(sq, {make_direction(1, 0), 1.5});
  CHECK(chain_area(empty_cap) == Approx(0.0));
}

TEST_CASE("clip_chain against a half-plane") {
  const Chain sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Chain left = clip_chain(sq, {{1, 0}, 0.5});  // keep x <= 0.5
  CHECK(chain_area(left) == Approx(0.5));
  const Chain all = clip_chain(sq, {{1, 0}, 2.0});
  CHECK(chain_area(all) == Approx(1.0));
  const Chain none = clip_chain(sq, {{1, 0}, -0.5});
  CHECK(none.empty());
}

TEST_CASE("containment, clearance and distances") {
  const ConvexPolygon sq = make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto planes = edge_planes(sq);
  CHECK(contains_point(planes, {0.5, 0.5}, 0.0));
  CHECK(contains_point(planes, {1.0, 1.0}, 1e-12));
  CHECK(!contains_point(planes, {1.1, 0.5}, 1e-6));
  CHECK(boundary_clearance(planes, {0.5, 0.5}) == Approx(0.5));
  CHECK(boundary_clearance(planes, {1.2, 0.5}) == Approx(-0.2));

  CHECK(distance_to_chain(sq.vertices, {0.5, 0.5}) == 0.0);
  CHECK(distance_to_chain(sq.vertices, {2.0, 0.5}) == Approx(1.0));
  CHECK(distance_to_chain(sq.vertices, {2.0, 2.0}) == Approx(std::sqrt(2.0)));

  const Chain shifted = {{0.25, 0}, {1.25, 0}, {1.25, 1}, {0.25, 1}};
  CHECK(hausdorff_distance(sq.vertices, shifted) == Approx(0.25));
}

TEST_CASE("chain classification ladder") {
  const double tol = 1e-9;
  const RegionSummary pt = classify_chain({{1, 2}}, tol);
  CHECK(pt.kind == RegionKind::point);
  CHECK(pt.representative.x == Approx(1.0));

  const RegionSummary seg = classify_chain({{0, 0}, {1, 0}}, tol);
  CHECK(seg.kind == RegionKind::segment);
  CHECK(seg.representative.x == Approx(0.5));

  const RegionSummary poly = classify_chain({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, tol);
  CHECK(poly.kind == RegionKind::polygon);

  // a sliver thinner than 10 * tol * diameter classifies as a segment
  const RegionSummary thin =
      classify_chain({{0, 0}, {1, 0}, {1, 1e-11}, {0, 1e-11}}, tol);
  CHECK(thin.kind == RegionKind::segment);
}

TEST_CASE("minimum enclosing disk") {
  const Disk d = min_enclosing_disk(make_polygon({{0, 0}, {4, 0}, {1, 0.5}}));
  CHECK(d.center.x == Approx(2.0));
  CHECK(d.center.y == Approx(0.0).epsilon(1e-6));
  CHECK(d.radius == Approx(2.0));

  const Disk ds = min_enclosing_disk(make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(ds.center.x == Approx(0.5));
  CHECK(ds.center.y == Approx(0.5));
  CHECK(ds.radius == Approx(std::sqrt(0.5)));
}

TEST_CASE("enclosing disk covers random polygons tightly") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 20; ++i) {
    const ConvexPolygon k = testutil::random_polygon(rng);
    const Disk d = min_enclosing_disk(k);
    double reach = 0.0;
    for (const auto& v : k.vertices) reach = std::max(reach, dist(v, d.center));
    CHECK(reach <= d.radius + 1e-9 * d.radius);
    CHECK(reach >= d.radius - 1e-6 * d.radius);  // some vertex is on the rim
  }
}

TEST_CASE("chebyshev set of a right triangle is its incenter") {
  const ConvexPolygon tri = make_polygon({{0, 0}, {4, 0}, {0, 3}});
  const ChebyshevSet c = chebyshev_set(tri, 1e-9);
  CHECK(c.inradius == Approx(1.0).epsilon(1e-6));
  CHECK(c.kind == RegionKind::point);
  CHECK(c.center.x == Approx(1.0).epsilon(1e-5));
  CHECK(c.center.y == Approx(1.0).epsilon(1e-5));
}

TEST_CASE("chebyshev set of a rectangle is a segment") {
  const ConvexPolygon rect = make_polygon({{-2, -1}, {2, -1}, {2, 1}, {-2, 1}});
  const ChebyshevSet c = chebyshev_set(rect, 1e-9);
  CHECK(c.inradius == Approx(1.0).epsilon(1e-6));
  CHECK(c.kind == RegionKind::segment);
  CHECK(c.center.x == Approx(0.0).epsilon(1e-5));
  CHECK(c.center.y == Approx(0.0).epsilon(1e-5));
  const double reach = support(c.kernel, make_direction(1, 0));
  CHECK(reach == Approx(1.0).epsilon(1e-3));
}

TEST_CASE("inscribed disk fits inside on random polygons") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 20; ++i) {
    const ConvexPolygon k = testutil::random_polygon(rng);
    const ChebyshevSet c = chebyshev_set(k, 1e-9 * polygon_diameter(k));
    CHECK(c.inradius > 0.0);
    const auto planes = edge_planes(k);
    CHECK(boundary_clearance(planes, c.center) >=
          c.inradius - 1e-6 * polygon_diameter(k));
  }
}

TEST_CASE("reflection across a fold axis") {
  const FoldAxis ax{make_direction(1, 0), 0.25};
  const Point2 r = reflect_point({1.0, 0.7}, ax);
  CHECK(r.x == Approx(-0.5));
  CHECK(r.y == Approx(0.7));
}
