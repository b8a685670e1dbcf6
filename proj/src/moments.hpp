#pragma once

#include <functional>

#include "polygon.hpp"

namespace heartlib {

enum class MomentKind { power_p, inverse_p, log_kernel };

struct MomentSpec {
  MomentKind kind = MomentKind::power_p;
  double p = 2.0;
  int quadrature_order = 20;
};

struct MinimizerResult {
  Point2 point;
  double value = 0.0;
  bool flat_flag = false;
  int iterations = 0;  // objective evaluations spent by the nested searches
};

// integral over K of |y-x|^p; even integer p evaluates exactly (polynomial integrand)
double mu_p_value(const ConvexPolygon& k, Point2 x, double p, int order = 20);

// integral over K of log|y-x|; the radial part of the fan from x is closed-form
double mu_log_value(const ConvexPolygon& k, Point2 x, int order = 20);

// integral over the complement of K of |y-x|^{-p}, p > 2, x strictly interior
double nu_p_value(const ConvexPolygon& k, Point2 x, double p, int order = 20);

double moment_value(const ConvexPolygon& k, Point2 x, const MomentSpec& spec);

MinimizerResult minimize_mu_p(const ConvexPolygon& k, double p, double tol);
MinimizerResult minimize_nu_p(const ConvexPolygon& k, double p, double tol);
MinimizerResult minimize_mu_log(const ConvexPolygon& k, double tol);

struct InteriorSearch {
  Point2 point;
  double value = 0.0;
  int iterations = 0;
};

// golden section over x of the golden-section minimum over the vertical chord;
// exact for convex objectives since partial minima of convex functions are convex
InteriorSearch minimize_convex_over_polygon(const ConvexPolygon& k,
                                            const std::function<double(Point2)>& f,
                                            double tol, double chord_margin = 0.0);

}  // namespace heartlib
