#pragma once

#include <functional>
#include <vector>

namespace heartlib {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre rule, cached per order; thread-safe
const GaussRule& gauss_rule(int order);

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order);

// panel-adaptive Gauss with a relative tolerance against the running global
// magnitude; required because integrand scales here span ~1e70
double adaptive_gauss(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-12, int order = 20, int max_depth = 26);

}  // namespace heartlib
