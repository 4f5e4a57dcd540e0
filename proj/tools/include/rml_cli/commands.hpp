#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rml/chart.hpp"
#include "rml_cli/report.hpp"

namespace rml::cli {

struct Options {
  Format format = Format::Table;
  double tol = 1e-6;
  int profile_degree = 8;
  int path_M = 10;
  std::optional<std::uint64_t> seed;
  bool timings = false;
};

/// Loads a scenario file or "builtin:example3" (honouring the profile
/// options) and feeds its text into the report digest.
Scenario load_for_report(const std::string& path, const Options& opts, Report& report);

/// Parses "3,4,5" or "1/2,-3/4" into exact rationals.
std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what);

Report cmd_poles(const std::string& scenario, const Options& opts);
Report cmd_eval(const std::string& scenario, const std::optional<std::string>& chart,
                const std::optional<std::string>& lambda, const Options& opts);
Report cmd_global(const std::string& scenario, const Options& opts);
Report cmd_residue(const std::string& scenario, const std::string& form, const std::string& point, const Options& opts);
Report cmd_tube(const std::string& scenario, const std::optional<std::string>& chart,
                const std::optional<std::string>& eps, const Options& opts);
Report cmd_mellin_check(const std::string& scenario, const std::optional<std::string>& chart,
                        const std::vector<std::string>& lambdas, const Options& opts);
Report cmd_divlemma(const std::string& file, const Options& opts);
Report cmd_deduce(int p, int q, const Options& opts);
Report cmd_verify_example3(const Options& opts, bool drop_zeta);

}  // namespace rml::cli
