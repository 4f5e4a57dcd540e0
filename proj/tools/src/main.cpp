#include <CLI11.hpp>

#include <iostream>

#include "rml_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace rml::cli;
  CLI::App app{"rml: residue currents of monomial data, exact and numeric"};
  app.require_subcommand(1);

  Options opts;
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--tol", opts.tol, "Relative tolerance for numeric comparisons");
  app.add_option("--profile-degree", opts.profile_degree, "Degree bound of built-in radial profiles");
  app.add_option("--path-M", opts.path_M, "Exponent base of the admissible path");
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized built-in profiles");
  app.add_flag("--timings", opts.timings, "Include timings (reports are then not reproducible)");

  std::string scenario, chart, lambda, form, point, eps, file;
  std::vector<std::string> lambdas;
  int p = 1, q = 0;
  bool drop_zeta = false;

  auto* poles = app.add_subcommand("poles", "Per-chart and global pole certificates");
  poles->add_option("scenario", scenario, "Scenario file or builtin:example3")->required();

  auto* eval = app.add_subcommand("eval", "Exact Gamma per chart; optional evaluation and quadrature cross-check");
  eval->add_option("scenario", scenario)->required();
  auto* eval_chart = eval->add_option("--chart", chart);
  auto* eval_lambda = eval->add_option("--lambda", lambda, "Comma-separated rationals");

  auto* global = app.add_subcommand("global", "Sum over charts, poles through the origin, value at 0");
  global->add_option("scenario", scenario)->required();

  auto* residue = app.add_subcommand("residue", "Simple-pole residues per chart on a hyperplane");
  residue->add_option("scenario", scenario)->required();
  residue->add_option("--form", form, "Integer coefficients, e.g. 1,1,0")->required();
  residue->add_option("--point", point, "Rational point on the hyperplane")->required();

  auto* tube = app.add_subcommand("tube", "Tube integral and admissible-path limit (diagonal charts)");
  tube->add_option("scenario", scenario)->required();
  auto* tube_chart = tube->add_option("--chart", chart);
  auto* tube_eps = tube->add_option("--eps", eps, "Evaluate I(eps) at these rationals");

  auto* mellin = app.add_subcommand("mellin-check", "Iterated Mellin transform of I(eps) against exact Gamma");
  mellin->add_option("scenario", scenario)->required();
  auto* mellin_chart = mellin->add_option("--chart", chart);
  mellin->add_option("--lambda", lambdas, "Point(s), comma-separated rationals; repeatable");

  auto* divlemma = app.add_subcommand("divlemma", "Division construction and its two properties");
  divlemma->add_option("file", file)->required();

  auto* deduce = app.add_subcommand("deduce", "Pole-elimination deduction for gamma(l_1..l_p; l_p+1..l_p+q)");
  deduce->add_option("p", p)->required();
  deduce->add_option("q", q)->required();

  auto* example3 = app.add_subcommand("example3", "Built-in blow-up example: certificates, cancellation, value at 0");
  example3->add_flag("--drop-zeta", drop_zeta, "Omit the second chart");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opts.format = format == "json" ? Format::Json : Format::Table;
  if (*seed_opt) opts.seed = seed;

  auto optional = [](CLI::Option* o, const std::string& v) { return *o ? std::optional<std::string>(v) : std::nullopt; };

  Report report("");
  if (*poles) report = cmd_poles(scenario, opts);
  else if (*eval) report = cmd_eval(scenario, optional(eval_chart, chart), optional(eval_lambda, lambda), opts);
  else if (*global) report = cmd_global(scenario, opts);
  else if (*residue) report = cmd_residue(scenario, form, point, opts);
  else if (*tube) report = cmd_tube(scenario, optional(tube_chart, chart), optional(tube_eps, eps), opts);
  else if (*mellin) report = cmd_mellin_check(scenario, optional(mellin_chart, chart), lambdas, opts);
  else if (*divlemma) report = cmd_divlemma(file, opts);
  else if (*deduce) report = cmd_deduce(p, q, opts);
  else if (*example3) report = cmd_verify_example3(opts, drop_zeta);

  std::cout << report.render(opts.format, opts.timings);
  return report.exit_code();
}
