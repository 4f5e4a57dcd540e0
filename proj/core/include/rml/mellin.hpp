#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rml/chart.hpp"
#include "rml/linform.hpp"
#include "rml/mero.hpp"

namespace rml {

/// pi * int_0^1 t^(mu + c/2) rho(t) dt  =  2 pi int_0^inf r^(2 mu + c) rho(r^2) r dr,
/// as a rational function of lambda where mu = sum mu_coeffs[j] l_j.
/// Carries (2 pi i)^1 with pi = (2 pi i) * (-i/2).  Requires c even and
/// rho supported on knots {0, 1}.
MeroValue radial_integral(const std::vector<std::int64_t>& mu_coeffs, int c, const RadialProfile& rho);

/// Exact contribution of one chart to Gamma on the separable class.
/// Pure in its inputs; reduced.
MeroValue gamma_exact(const Scenario& scenario, const std::string& chart);

/// Sum of gamma_exact over all charts, reduced.
MeroValue gamma_global(const Scenario& scenario);

/// Sign of the permutation that brings the differentials
/// dxbar_I, dx_1..dx_n, dxbar_S into the order dx_1 dxbar_1 dx_2 dxbar_2 ...
int form_sign(const std::vector<int>& I, int n, const std::vector<int>& S);

/// Simple-pole residue coefficient: (form * v) evaluated at a point on form = 0.
TokenScalar residue_on(const LinForm& form, const MeroValue& v, const std::vector<GaussRational>& point);

/// Exact value at lambda = 0; throws PoleAtOrigin when a pole hyperplane
/// passes through the origin.
TokenScalar value_at_origin(const MeroValue& v);

/// For a value in one variable: the largest real pole location, if any.
std::optional<Rational> extreme_pole(const MeroValue& v);

}  // namespace rml
