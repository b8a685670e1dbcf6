#include <doctest.h>

#include <cmath>

#include "gauss.hpp"
#include "moments.hpp"
#include "test_util.hpp"

using namespace heartlib;
using doctest::Approx;

namespace {
const ConvexPolygon kSquare =
    make_polygon({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
const ConvexPolygon kTri345 = make_polygon({{0, 0}, {4, 0}, {0, 3}});
}  // namespace

TEST_CASE("gauss rules integrate polynomials exactly") {
  const auto poly9 = [](double x) { return std::pow(x, 9); };
  CHECK(std::fabs(gauss_integrate(poly9, -1.0, 1.0, 5)) <= 1e-14);
  const auto poly8 = [](double x) { return std::pow(x, 8); };
  CHECK(gauss_integrate(poly8, -1.0, 1.0, 5) == Approx(2.0 / 9.0).epsilon(1e-13));
  const auto runge = [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
  CHECK(adaptive_gauss(runge, -1.0, 1.0, 1e-12) ==
        Approx(0.4 * std::atan(5.0)).epsilon(1e-11));
}

TEST_CASE("even power moments of the centered unit square") {
  const Point2 c{0, 0};
  CHECK(mu_p_value(kSquare, c, 2.0) == Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(mu_p_value(kSquare, c, 4.0) == Approx(7.0 / 180.0).epsilon(1e-13));
  CHECK(mu_p_value(kSquare, c, 6.0) == Approx(3.0 / 280.0).epsilon(1e-13));
}

TEST_CASE("parallel axis identity for the quadratic moment") {
  std::mt19937_64 rng(301);
  for (int i = 0; i < 10; ++i) {
    const ConvexPolygon k = testutil::random_polygon(rng);
    const Point2 m = polygon_centroid(k);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Point2 x{m.x + u(rng), m.y + u(rng)};
    const double lhs = mu_p_value(k, x, 2.0);
    const double rhs = mu_p_value(k, m, 2.0) + polygon_area(k) * norm2(x - m);
    CHECK(lhs == Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("fractional and odd exponents agree with the even path in the limit") {
  const Point2 x{0.1, -0.2};
  const double exact = mu_p_value(kSquare, x, 2.0);
  const double near = mu_p_value(kSquare, x, 2.0 + 1e-9);
  CHECK(near == Approx(exact).epsilon(1e-6));
  CHECK(std::isfinite(mu_p_value(kSquare, x, 0.5)));
  CHECK(std::isfinite(mu_p_value(kSquare, x, 1.0)));
  CHECK(std::isfinite(mu_p_value(kSquare, x, 5.5)));
}

TEST_CASE("log moment obeys the scaling identity") {
  // integral over cK of log |y - cx| equals c^2 (value + area log c)
  const double c = 3.0;
  Chain scaled;
  for (const auto& v : kTri345.vertices) scaled.push_back(c * v);
  const ConvexPolygon big = make_polygon(scaled);
  const Point2 x{1.0, 0.8};
  const double base = mu_log_value(kTri345, x);
  const double lhs = mu_log_value(big, {c * x.x, c * x.y});
  const double rhs = c * c * (base + polygon_area(kTri345) * std::log(c));
  CHECK(lhs == Approx(rhs).epsilon(1e-9));
}

TEST_CASE("inverse moment obeys the scaling identity") {
  const double c = 2.0;
  Chain scaled;
  for (const auto& v : kTri345.vertices) scaled.push_back(c * v);
  const ConvexPolygon big = make_polygon(scaled);
  const Point2 x{1.0, 1.0};
  const double p = 4.0;
  const double lhs = nu_p_value(big, {c * x.x, c * x.y}, p);
  const double rhs = std::pow(c, 2.0 - p) * nu_p_value(kTri345, x, p);
  CHECK(lhs == Approx(rhs).epsilon(1e-9));
}

TEST_CASE("inverse moment shrinks when the body grows") {
  const Point2 x{0.0, 0.0};
  const ConvexPolygon small =
      make_polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const ConvexPolygon large =
      make_polygon({{-2, -2}, {2, -2}, {2, 2}, {-2, 2}});
  CHECK(nu_p_value(large, x, 3.0) < nu_p_value(small, x, 3.0));
}

TEST_CASE("moment argument validation") {
  try {
    mu_p_value(kSquare, {0, 0}, -1.0);
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
  try {
    nu_p_value(kSquare, {0, 0}, 2.0);
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
  try {
    nu_p_value(kSquare, {0.5, 0.0}, 4.0);  // on the boundary
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::point_too_close_to_boundary);
  }
}

TEST_CASE("mu_p is midpoint convex along random segments") {
  std::mt19937_64 rng(302);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const ConvexPolygon k = testutil::random_polygon(rng);
    const BoundingBox box = bounding_box(k.vertices);
    const Point2 a{box.xmin + box.width() * u(rng), box.ymin + box.height() * u(rng)};
    const Point2 b{box.xmin + box.width() * u(rng), box.ymin + box.height() * u(rng)};
    const Point2 mid = 0.5 * (a + b);
    for (double p : {1.0, 2.0, 3.0}) {
      const double fm = mu_p_value(k, mid, p);
      const double avg = 0.5 * (mu_p_value(k, a, p) + mu_p_value(k, b, p));
      CHECK(fm <= avg * (1.0 + 1e-12) + 1e-12);
    }
  }
}

TEST_CASE("quadratic moment minimizer is the centroid") {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 5; ++i) {
    const ConvexPolygon k = testutil::random_polygon(rng);
    const double tol = 1e-10 * polygon_diameter(k);
    const MinimizerResult r = minimize_mu_p(k, 2.0, tol);
    CHECK(dist(r.point, polygon_centroid(k)) <= 1e-6 * polygon_diameter(k));
    CHECK(r.iterations > 0);
  }
}

TEST_CASE("high power moment minimizer approaches the circumcenter") {
  const double tol = 1e-9 * polygon_diameter(kTri345);
  const MinimizerResult r = minimize_mu_p(kTri345, 50.0, tol);
  const double d = dist(r.point, {2.0, 1.5});
  CHECK(d >= 0.10);  // p = 50 is close to, but measurably away from, the limit
  CHECK(d <= 0.20);
  CHECK(r.value > 0.0);
  CHECK(!r.flat_flag);
}

TEST_CASE("high inverse moment minimizer approaches the incenter") {
  const double tol = 1e-9 * polygon_diameter(kTri345);
  const MinimizerResult r = minimize_nu_p(kTri345, 40.0, tol);
  CHECK(dist(r.point, {1.0, 1.0}) <= 0.05);
}

TEST_CASE("tiny exponents reproduce the geometric mean limit") {
  const double area = polygon_area(kTri345);
  const double p = 1e-3;
  const double lhs = std::pow(mu_p_value(kTri345, {1.2, 1.0}, p) / area, 1.0 / p);
  const double rhs = std::exp(mu_log_value(kTri345, {1.2, 1.0}) / area);
  CHECK(lhs == Approx(rhs).epsilon(1e-2));
}

TEST_CASE("log moment minimizer lands between centroid and incenter") {
  const double tol = 1e-9 * polygon_diameter(kTri345);
  const MinimizerResult r = minimize_mu_log(kTri345, tol);
  CHECK(contains_point(kTri345, r.point, 0.0));
  CHECK(dist(r.point, polygon_centroid(kTri345)) < 0.5);
}

TEST_CASE("generic convex minimization recovers a known target") {
  std::mt19937_64 rng(304);
  const ConvexPolygon k = testutil::random_polygon(rng);
  const Point2 target = polygon_centroid(k);
  const auto f = [&](Point2 x) { return norm2(x - target); };
  const InteriorSearch s =
      minimize_convex_over_polygon(k, f, 1e-10 * polygon_diameter(k), 0.0);
  CHECK(dist(s.point, target) <= 1e-7 * polygon_diameter(k));
}

TEST_CASE("minimizers reject a non-positive tolerance") {
  try {
    minimize_mu_p(kSquare, 2.0, 0.0);
    CHECK(false);
  } catch (const geometry_error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
}
