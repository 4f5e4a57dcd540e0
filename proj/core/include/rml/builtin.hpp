#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rml/chart.hpp"

namespace rml {

/// Built-in blow-up example: f = (x1, x2, x3) with one principal-value
/// factor x1 and dbar-factors x2, x3 on C^3, blown up along x2 = x3 = 0.
/// Lambda order is (l1, l2, l3) <-> (x2, x3, x1).
struct Example3Options {
  int profile_degree = 8;               // degree bound D of the radial profiles
  std::optional<std::uint64_t> seed;    // random profiles when set
  bool drop_zeta = false;               // omit the second chart
};

/// Radial profiles h, g2, g3 (ascending coefficients on [0,1]) of the test
/// data phi = h(|x1|^2), phi2 = g2(|x2|^2), phi3 = g3(|x3|^2).
struct Example3Profiles {
  std::vector<Rational> h;
  std::vector<Rational> g2;
  std::vector<Rational> g3;
};

Example3Profiles example3_profiles(const Example3Options& opts);

/// Charts "z" (x3 = z2 z3) and "zeta" (x2 = zeta2 zeta3) with pulled-back
/// test forms, split by the equatorial partition |z3| <= 1 / |zeta3| < 1.
Scenario builtin_example3(const Example3Options& opts = {});
Scenario builtin_example3(const Example3Profiles& profiles, bool drop_zeta = false);

/// The same integral on the unblown base chart x.
Scenario example3_base_scenario(const Example3Profiles& profiles);

/// The form obtained after integrating by parts in x2 and x3: all three
/// factors principal value, test form phi1 * dphi2/dxbar2 * dphi3/dxbar3.
Scenario example3_ibp_scenario(const Example3Profiles& profiles);

/// Monomial maps x_k = prod_i z_i^{M[k][i]} of the two charts.
IntMatrix example3_map_z();
IntMatrix example3_map_zeta();

/// -h(0) g2(0) g3(0); the expected value at the origin is this times (2 pi i)^3.
Rational example3_expected_coefficient(const Example3Profiles& profiles);

}  // namespace rml
