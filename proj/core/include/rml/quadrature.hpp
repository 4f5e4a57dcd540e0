#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "rml/chart.hpp"

namespace rml {

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;  // estimated absolute error
  bool converged = true;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration on [a, b].  The
/// subdivision schedule depends only on the integrand values, and the final
/// sum runs over intervals in left-to-right order, so results are
/// reproducible bit for bit.
QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                                    int max_intervals = 4000);

/// Same, with forced breakpoints (sorted, inside [a, b]).
QuadratureResult integrate_piecewise(const ComplexIntegrand& f, std::vector<double> breaks, double abs_tol,
                                     double rel_tol);

/// Floating-point evaluation of one chart's Gamma at a complex point in the
/// absolute-convergence zone (Re l_j >= 2), by polar quadrature in each
/// variable.  Supports n <= 3.
QuadratureResult gamma_quadrature(const Scenario& scenario, const std::string& chart,
                                  const std::vector<std::complex<double>>& lambda, double rel_tol = 1e-10);

}  // namespace rml
