#pragma once

#include <string>
#include <string_view>

#include <optional>
#include <set>
#include <vector>

#include "rml/chart.hpp"
#include "rml/exterior.hpp"

namespace rml {

/// Parses and validates a scenario JSON document.  Errors are InputError
/// with a field path such as "charts[0].beta[0][0]".
Scenario parse_scenario(std::string_view document);

/// Canonical JSON rendering; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

/// Reads a scenario from a file, or builds "builtin:example3".
Scenario load_scenario(const std::string& path_or_builtin);

std::string read_text_file(const std::string& path);

/// Form literal {n, degree, terms:[{idx:[..], poly:[{exps:[..], coeff:[num,den]}]}]},
/// 1-based idx.  "n" may be omitted when some monomial fixes it.
PolyForm parse_polyform(std::string_view document);
std::string serialize_polyform(const PolyForm& form);

/// Input of the division-lemma command: {psi, K, omega?, alphas?}.
struct DivLemmaInput {
  PolyForm psi;
  std::optional<PolyForm> omega;
  std::set<int> K;  // 0-based
  std::vector<std::vector<int>> alphas;
};

DivLemmaInput parse_divlemma(std::string_view document);

}  // namespace rml
