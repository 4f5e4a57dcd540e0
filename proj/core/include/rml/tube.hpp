#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rml/chart.hpp"

namespace rml {

/// Diagonal tube data: f_j = x_j^{k_j}, the first p residue-type
/// ({|f_j|^2 = eps_j}), the last q principal-value type ({|f_j|^2 > eps_j}).
struct TubeSpec {
  std::vector<int> k;
  int p = 0;
  int q = 0;
  int N = 1;
  int n() const { return p + q; }
};

/// Reads a diagonal chart (row j = k_j e_j, no Jacobian, sign +1).
/// Throws UnsupportedTube otherwise.
TubeSpec tube_spec_from(const Scenario& scenario, const std::string& chart);

/// Per-variable factors of one term of the tube integral; their product
/// times the term coefficient and orientation sign is the term's value.
std::vector<std::complex<double>> tube_variable_factors(const TubeSpec& spec, const TestFormTerm& term,
                                                        const std::vector<double>& eps);

/// I(eps) = int_{T(eps)} phi / f^N, evaluated by angular selection and
/// closed-form radial primitives.
std::complex<double> tube_integral(const TubeSpec& spec, const SeparableTestForm& form, const std::vector<double>& eps);

/// eps_j(t) = t^(M^(p+q-j)), j = 1..p+q, sampled at t = t0 * 2^-i.
struct AdmissiblePath {
  int M = 10;
  double t0 = 0.5;
  int samples = 24;
  int depth = 3;  // levels of repeated Aitken extrapolation
  std::vector<double> eps_at(double t, int count) const;
};

struct LimitResult {
  std::complex<double> value;
  double error = 0.0;
  bool converged = true;
  std::vector<std::complex<double>> samples;
};

/// Extrapolated limit of I(eps(t)) as t -> 0 along the path.
LimitResult admissible_limit(const TubeSpec& spec, const SeparableTestForm& form, const AdmissiblePath& path,
                             double tol = 1e-8);

struct MellinPoint {
  std::vector<std::complex<double>> lambda;
  std::complex<double> numeric;
  std::complex<double> exact;
  double rel_error = 0.0;
  int sign = 0;  // numeric ~ sign * exact; 0 when both vanish
  bool converged = true;
  bool pass = false;
};

struct MellinReport {
  std::vector<MellinPoint> points;
  int resolved_sign = 0;  // common sign over all points, 0 if undetermined
  bool sign_consistent = true;
  bool pass = true;
};

/// Compares prod_j l_j int I(s) prod_j s_j^(l_j - 1) ds (numerical) with the
/// exact Gamma of the same chart; p + q <= 2.
MellinReport mellin_check(const Scenario& scenario, const std::string& chart,
                          const std::vector<std::vector<std::complex<double>>>& points, double tol = 1e-6);

}  // namespace rml
