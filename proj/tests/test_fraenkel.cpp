#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fraenkel.hpp"
#include "test_util.hpp"

using namespace heartlib;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const ConvexPolygon kUnitSquare =
    make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}  // namespace

TEST_CASE("clipped disk area on the unit square") {
  // quarter disk at a corner
  CHECK(clipped_disk_area(kUnitSquare, {0, 0}, 0.5) == Approx(kPi / 16.0).epsilon(1e-12));
  CHECK(clipped_disk_area(kUnitSquare, {1, 1}, 0.5) == Approx(kPi / 16.0).epsilon(1e-12));
  // disk fully inside
  CHECK(clipped_disk_area(kUnitSquare, {0.5, 0.5}, 0.4) ==
        Approx(kPi * 0.16).epsilon(1e-12));
  // disk covering the square
  CHECK(clipped_disk_area(kUnitSquare, {0.5, 0.5}, 5.0) == Approx(1.0).epsilon(1e-12));
  // half disk on an edge midpoint
  CHECK(clipped_disk_area(kUnitSquare, {0.5, 0.0}, 0.25) ==
        Approx(0.5 * kPi * 0.0625).epsilon(1e-12));
}

TEST_CASE("clipped disk area is monotone in the radius") {
  std::mt19937_64 rng(401);
  const ConvexPolygon k = testutil::random_polygon(rng);
  const Point2 c = polygon_centroid(k);
  double prev = 0.0;
  for (double r = 0.1; r < 6.0; r += 0.37) {
    const double a = clipped_disk_area(k, c, r);
    CHECK(a >= prev - 1e-12);
    CHECK(a <= polygon_area(k) + 1e-12);
    prev = a;
  }
}

TEST_CASE("overlap is log concave along segments") {
  std::mt19937_64 rng(402);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0;
  while (tested < 100) {
    const ConvexPolygon k = testutil::random_polygon(rng);
    const double r = std::sqrt(polygon_area(k) / kPi);
    const BoundingBox box = bounding_box(k.vertices);
    const Point2 a{box.xmin + box.width() * u(rng), box.ymin + box.height() * u(rng)};
    const Point2 b{box.xmin + box.width() * u(rng), box.ymin + box.height() * u(rng)};
    const double ga = clipped_disk_area(k, a, r);
    const double gb = clipped_disk_area(k, b, r);
    if (ga <= 0.0 || gb <= 0.0) continue;
    const double gm = clipped_disk_area(k, 0.5 * (a + b), r);
    CHECK(gm * gm >= ga * gb * (1.0 - 1e-9));
    ++tested;
  }
}

TEST_CASE("square attains the known asymmetry at its center") {
  const FraenkelResult f = fraenkel_asymmetry(kUnitSquare, 1e-9);
  CHECK(f.r_star == Approx(1.0 / std::sqrt(kPi)).epsilon(1e-12));
  CHECK(dist(f.center, {0.5, 0.5}) <= 1e-4);
  // the centered disk loses four circular segments past the edges; the
  // symmetric difference counts each loss twice
  const double alpha = std::acos(std::sqrt(kPi) / 2.0);
  const double segment =
      (alpha - std::sin(alpha) * std::cos(alpha)) / kPi;
  CHECK(f.asymmetry == Approx(8.0 * segment).epsilon(1e-4));
  CHECK(!f.flat_flag);
}

TEST_CASE("thin rectangle matching the disk area has a flat maximizer") {
  const double eps = 0.2;
  const double w = kPi / (4.0 * eps);
  const ConvexPolygon rect =
      make_polygon({{-w, -eps}, {w, -eps}, {w, eps}, {-w, eps}});
  CHECK(polygon_area(rect) == Approx(kPi).epsilon(1e-12));
  const double tol = 1e-9 * polygon_diameter(rect);
  const FraenkelResult f = fraenkel_asymmetry(rect, tol);
  CHECK(f.r_star == Approx(1.0).epsilon(1e-12));
  // overlap of the unit disk with the strip |y| <= eps, away from the ends
  const double overlap = 2.0 * (eps * std::sqrt(1.0 - eps * eps) + std::asin(eps));
  CHECK(f.gamma_max == Approx(overlap).epsilon(1e-6));
  CHECK(f.asymmetry == Approx(2.0 * (1.0 - overlap / kPi)).epsilon(1e-6));
  CHECK(f.flat_flag);
  CHECK(std::fabs(f.center.y) <= 1e-4);
  // any center well inside the long axis attains the same overlap
  CHECK(std::fabs(f.center.x) <= w - 1.0);
}

TEST_CASE("radius override changes the matched disk") {
  const FraenkelResult f = fraenkel_asymmetry(kUnitSquare, 1e-9, 0.1);
  CHECK(f.r_star == Approx(0.1));
  CHECK(f.gamma_max == Approx(kPi * 0.01).epsilon(1e-9));
  CHECK(f.asymmetry == Approx(2.0 * (1.0 - kPi * 0.01)).epsilon(1e-9));
}

TEST_CASE("asymmetry is translation invariant") {
  std::mt19937_64 rng(403);
  const ConvexPolygon k = testutil::random_polygon(rng);
  Chain moved;
  for (const auto& v : k.vertices) moved.push_back({v.x + 3.5, v.y - 1.25});
  const ConvexPolygon k2 = make_polygon(moved);
  const double tol = 1e-9 * polygon_diameter(k);
  const FraenkelResult f1 = fraenkel_asymmetry(k, tol);
  const FraenkelResult f2 = fraenkel_asymmetry(k2, tol);
  CHECK(f1.asymmetry == Approx(f2.asymmetry).epsilon(1e-6));
  CHECK(f2.center.x - f1.center.x == Approx(3.5).epsilon(1e-3));
}

TEST_CASE("clipped disk rejects a non-positive radius") {
  try {
    clipped_disk_area(kUnitSquare, {0.5, 0.5}, 0.0);
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
}
