#pragma once

#include <set>
#include <string>
#include <vector>

#include "rml/chart.hpp"
#include "rml/linform.hpp"
#include "rml/mero.hpp"

namespace rml {

struct RankBasis {
  int m = 0;
  std::vector<int> basis;  // 0-based row indices, lexicographically first
};

/// Rank over Q and the greedy (lexicographically first) independent rows.
RankBasis rank_basis(const IntMatrix& alpha);

/// One term of the Leibniz expansion of the dbar-product over the
/// variable subset I.
struct MeroTerm {
  std::vector<int> subset;            // I, 0-based, increasing
  long long detA = 0;                 // det of basis rows restricted to I
  std::vector<int> numerator_axes;    // lambda axes left after cancellation
  std::vector<LinForm> denominators;  // uncancelled mu_i, i in I \ K
  std::vector<int> denominator_columns;
  std::vector<std::pair<int, int>> cancelled;  // (column i, axis t) with mu_i ~ l_t
  std::vector<int> dbar_profile;               // I cap K: dxbar/xbar absorbed by smoothness
};

/// Terms for every m-subset with nonzero determinant, in lexicographic
/// subset order.  Throws ResonantUnits / UniquenessViolated.
std::vector<MeroTerm> expand(const ChartSpec& chart);

struct HalfSpaceCert {
  Rational eps;                       // analytic where every Re l_j > -eps
  std::set<LinForm> excluded_poles;   // column forms whose radial poles sit at <= -1
};

struct PoleCertificate {
  std::set<LinForm> forms;
  std::string scope;  // chart name or "global"
  HalfSpaceCert halfspace;
};

/// eps = 1 / (largest column sum of the stacked exponent matrix).
HalfSpaceCert halfspace_for(const ChartSpec& chart);

PoleCertificate chart_certificate(const ChartSpec& chart);

/// Certificate read off the exact global value (sum over charts of the
/// exact chart contributions), after reduction.
PoleCertificate global_certificate(const Scenario& scenario);
PoleCertificate global_certificate(const Scenario& scenario, const MeroValue& global_value);

/// Forms violating the shape "support in {1..p}, at least two nonzero
/// entries"; empty when the certificate is well-shaped.
std::vector<LinForm> shape_violations(const PoleCertificate& cert, int p);

}  // namespace rml
