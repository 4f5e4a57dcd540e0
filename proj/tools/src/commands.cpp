#include "rml_cli/commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "rml/builtin.hpp"
#include "rml/error.hpp"
#include "rml/leibniz.hpp"
#include "rml/mellin.hpp"
#include "rml/pole_calculus.hpp"
#include "rml/quadrature.hpp"
#include "rml/scenario_io.hpp"
#include "rml/tube.hpp"

namespace rml::cli {

using nlohmann::json;

namespace {

// Error codes that signal a violated mathematical expectation rather than bad input.
bool is_violation(const std::string& code) { return code == "UniquenessViolated" || code == "Stalled"; }

Report guarded(const std::string& command, const std::function<void(Report&)>& body) {
  Report report(command);
  try {
    body(report);
  } catch (const InputError& e) {
    report.set_error(2, e.what());
  } catch (const Error& e) {
    report.set_error(is_violation(e.code()) ? 1 : 2, e.what());
  }
  return report;
}

class Stopwatch {
 public:
  double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::string> chart_names(const Scenario& s, const std::optional<std::string>& chart) {
  if (chart) {
    s.chart(*chart);
    return {*chart};
  }
  std::vector<std::string> out;
  for (const auto& c : s.charts) out.push_back(c.name);
  return out;
}

int mellin_sign(int p) { return (p * (p - 1) / 2) % 2 == 0 ? 1 : -1; }

std::string join_forms(const std::set<LinForm>& forms) { return format_forms(forms); }

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError(what, "empty entry");
    item = item.substr(b, e - b + 1);
    if (item.front() == '+') item.erase(0, 1);
    Rational q;
    if (q.set_str(item, 10) != 0 || q.get_den() == 0) throw InputError(what, "not a rational: '" + item + "'");
    q.canonicalize();
    out.push_back(q);
  }
  if (out.empty()) throw InputError(what, "empty list");
  return out;
}

Scenario load_for_report(const std::string& path, const Options& opts, Report& report) {
  if (path == "builtin:example3") {
    Example3Options eo;
    eo.profile_degree = opts.profile_degree;
    eo.seed = opts.seed;
    Scenario s = builtin_example3(eo);
    report.add_input(serialize_scenario(s));
    return s;
  }
  const std::string text = read_text_file(path);
  report.add_input(text);
  return parse_scenario(text);
}

Report cmd_poles(const std::string& path, const Options& opts) {
  return guarded("poles " + path, [&](Report& r) {
    const Scenario s = load_for_report(path, opts, r);
    json charts = json::array();
    bool all_forms = true;
    for (const auto& c : s.charts) {
      const PoleCertificate cert = chart_certificate(c);
      charts.push_back(certificate_json(cert));
      const auto bad = shape_violations(cert, s.signature.p);
      r.line("chart " + c.name + ": " + join_forms(cert.forms) + "  eps=" + to_string(cert.halfspace.eps));
      std::string detail;
      for (const auto& f : bad) detail += (detail.empty() ? "" : ", ") + f.to_string();
      r.verdict("shape " + c.name, bad.empty(), bad.empty() ? "" : "offending " + detail);
      all_forms = all_forms && s.testforms.count(c.name) > 0;
    }
    r.set("charts", charts);
    if (all_forms && !s.charts.empty()) {
      const PoleCertificate g = global_certificate(s);
      r.set("global", certificate_json(g));
      r.line("global: " + join_forms(g.forms) + "  eps=" + to_string(g.halfspace.eps));
    } else {
      r.line("global: skipped (some chart has no test form)");
    }
  });
}

Report cmd_eval(const std::string& path, const std::optional<std::string>& chart,
                const std::optional<std::string>& lambda, const Options& opts) {
  std::string echo = "eval " + path;
  if (chart) echo += " --chart " + *chart;
  if (lambda) echo += " --lambda " + *lambda;
  return guarded(echo, [&](Report& r) {
    const Scenario s = load_for_report(path, opts, r);
    std::vector<Rational> point;
    if (lambda) {
      point = parse_rational_list(*lambda, "--lambda");
      if (static_cast<int>(point.size()) != s.signature.num_lambdas())
        throw InputError("--lambda", "expected " + std::to_string(s.signature.num_lambdas()) + " coordinates");
    }
    json out = json::array();
    for (const auto& name : chart_names(s, chart)) {
      Stopwatch sw;
      const MeroValue v = gamma_exact(s, name);
      r.set_timing("exact " + name, sw.ms());
      json entry{{"chart", name}, {"value", mero_json(v)}};
      r.line("chart " + name + ": " + v.to_string());
      if (lambda) {
        std::vector<GaussRational> gp(point.begin(), point.end());
        const TokenScalar exact = v.evaluate(gp);
        entry["exact_at_lambda"] = token_json(exact);
        r.line("  at lambda: " + to_string(exact));
        bool in_zone = s.signature.n <= 3;
        for (const auto& x : point) in_zone = in_zone && x >= 2;
        if (in_zone) {
          std::vector<std::complex<double>> cp;
          for (const auto& x : point) cp.emplace_back(to_double(x), 0.0);
          Stopwatch qw;
          const QuadratureResult q = gamma_quadrature(s, name, cp, 1e-10);
          r.set_timing("quadrature " + name, qw.ms());
          entry["quadrature"] = {{"value", complex_json(q.value)}, {"error", q.error}, {"converged", q.converged}};
          r.compare("exact vs quadrature " + name, q.value, exact.to_complex(), opts.tol);
        }
      }
      out.push_back(entry);
    }
    r.set("charts", out);
  });
}

Report cmd_global(const std::string& path, const Options& opts) {
  return guarded("global " + path, [&](Report& r) {
    const Scenario s = load_for_report(path, opts, r);
    const MeroValue v = gamma_global(s);
    const PoleCertificate cert = global_certificate(s, v);
    r.set("value", mero_json(v));
    r.set("certificate", certificate_json(cert));
    r.line("global value: " + v.to_string());
    r.line("poles through origin: " + join_forms(cert.forms));
    if (cert.forms.empty()) {
      const TokenScalar at0 = value_at_origin(v);
      r.set("value_at_origin", token_json(at0));
      r.line("value at origin: " + to_string(at0));
    }
    r.verdict("analytic at origin", cert.forms.empty(), cert.forms.empty() ? "" : "poles " + join_forms(cert.forms));
  });
}

Report cmd_residue(const std::string& path, const std::string& form_text, const std::string& point_text,
                   const Options& opts) {
  return guarded("residue " + path + " --form " + form_text + " --point " + point_text, [&](Report& r) {
    const Scenario s = load_for_report(path, opts, r);
    const auto raw = parse_rational_list(form_text, "--form");
    std::vector<std::int64_t> coeffs;
    for (const auto& x : raw) {
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw InputError("--form", "coefficients must be integers");
      coeffs.push_back(x.get_num().get_si());
    }
    const LinForm form = normalize(coeffs);
    const auto pt = parse_rational_list(point_text, "--point");
    if (pt.size() != form.arity() || static_cast<int>(pt.size()) != s.signature.num_lambdas())
      throw InputError("--point", "wrong number of coordinates");
    std::vector<GaussRational> gp(pt.begin(), pt.end());
    json list = json::array();
    GaussRational sum;
    int power = 0;
    for (const auto& c : s.charts) {
      const TokenScalar res = residue_on(form, gamma_exact(s, c.name), gp);
      list.push_back({{"chart", c.name}, {"residue", token_json(res)}});
      r.line("chart " + c.name + ": residue " + to_string(res));
      if (!res.coeff.is_zero()) {
        if (!sum.is_zero() && power != res.twopii_power) throw Error("TokenMismatch", "residues carry different 2*pi*i powers");
        power = res.twopii_power;
        sum += res.coeff;
      }
    }
    const TokenScalar total{sum, power};
    r.set("form", linform_json(form));
    r.set("residues", list);
    r.set("sum", token_json(total));
    r.line("sum: " + to_string(total));
    if (s.charts.size() > 1) r.verdict("residues cancel across charts", sum.is_zero(), "sum " + to_string(total));
  });
}

Report cmd_tube(const std::string& path, const std::optional<std::string>& chart, const std::optional<std::string>& eps,
                const Options& opts) {
  return guarded("tube " + path + " --path-M " + std::to_string(opts.path_M), [&](Report& r) {
    const Scenario s = load_for_report(path, opts, r);
    const std::string name = chart ? *chart : (s.charts.empty() ? "" : s.charts.front().name);
    const TubeSpec spec = tube_spec_from(s, name);
    const SeparableTestForm& form = s.testform(name);
    if (eps) {
      const auto e = parse_rational_list(*eps, "--eps");
      if (static_cast<int>(e.size()) != spec.n()) throw InputError("--eps", "wrong number of entries");
      std::vector<double> ed;
      for (const auto& x : e) {
        if (x <= 0) throw InputError("--eps", "entries must be positive");
        ed.push_back(to_double(x));
      }
      const auto I = tube_integral(spec, form, ed);
      r.set("tube_value", complex_json(I));
      r.line("I(eps) = " + format_complex(I));
    }
    AdmissiblePath path_cfg;
    path_cfg.M = opts.path_M;
    const LimitResult lim = admissible_limit(spec, form, path_cfg, opts.tol * 1e-2);
    r.set("limit", {{"value", complex_json(lim.value)}, {"error", lim.error}, {"converged", lim.converged}});
    r.line("admissible limit = " + format_complex(lim.value) + "  (extrapolation error " + std::to_string(lim.error) + ")");
    r.verdict("extrapolation converged", lim.converged);
    const TokenScalar v0 = value_at_origin(gamma_exact(s, name));
    const int sigma = mellin_sign(spec.p);
    r.set("value_at_origin", token_json(v0));
    r.set("orientation_sign", sigma);
    r.compare("limit vs continued value at origin", lim.value, static_cast<double>(sigma) * v0.to_complex(), opts.tol);
  });
}

Report cmd_mellin_check(const std::string& path, const std::optional<std::string>& chart,
                        const std::vector<std::string>& lambdas, const Options& opts) {
  return guarded("mellin-check " + path, [&](Report& r) {
    const Scenario s = load_for_report(path, opts, r);
    const std::string name = chart ? *chart : (s.charts.empty() ? "" : s.charts.front().name);
    const int k = s.signature.num_lambdas();
    std::vector<std::vector<std::complex<double>>> points;
    if (lambdas.empty()) {
      points.emplace_back(static_cast<std::size_t>(k), 3.0);
      points.emplace_back(static_cast<std::size_t>(k), 5.0);
    }
    for (const auto& text : lambdas) {
      std::vector<std::complex<double>> pt;
      for (const auto& x : parse_rational_list(text, "--lambda")) pt.emplace_back(to_double(x), 0.0);
      if (static_cast<int>(pt.size()) != k) throw InputError("--lambda", "wrong number of coordinates");
      for (const auto& x : pt)
        if (x.real() < 2) throw InputError("--lambda", "Mellin check needs Re l_j >= 2");
      points.push_back(pt);
    }
    const MellinReport m = mellin_check(s, name, points, opts.tol);
    json list = json::array();
    for (const auto& pt : m.points) {
      json lam = json::array();
      std::string lt;
      for (const auto& l : pt.lambda) {
        lam.push_back(complex_json(l));
        lt += (lt.empty() ? "" : ",") + format_complex(l);
      }
      list.push_back({{"lambda", lam},
                      {"numeric", complex_json(pt.numeric)},
                      {"exact", complex_json(pt.exact)},
                      {"sign", pt.sign},
                      {"rel_error", pt.rel_error},
                      {"tolerance", opts.tol},
                      {"pass", pt.pass}});
      char buf[48];
      std::snprintf(buf, sizeof buf, "rel %.3e", pt.rel_error);
      r.verdict("mellin identity at (" + lt + ")", pt.pass,
                format_complex(pt.numeric) + " vs " + format_complex(pt.exact) + ", sign " + std::to_string(pt.sign) + ", " + buf);
    }
    r.set("points", list);
    r.set("resolved_sign", m.resolved_sign);
    r.line("resolved sign: " + std::to_string(m.resolved_sign));
    r.verdict("sign consistent across points", m.sign_consistent);
  });
}

Report cmd_divlemma(const std::string& file, const Options& /*opts*/) {
  return guarded("divlemma " + file, [&](Report& r) {
    const std::string text = read_text_file(file);
    r.add_input(text);
    const DivLemmaInput in = parse_divlemma(text);
    const PolyForm omega = in.omega ? *in.omega : build_omega(in.psi, in.K);
    r.set("omega", json::parse(serialize_polyform(omega)));
    r.line("omega = " + omega.to_string());
    const auto prop = check_property_i(in.psi, omega, in.K);
    json pi = json::object();
    for (const auto& [j, ok] : prop) {
      pi[std::to_string(j + 1)] = ok;
      r.verdict("property i at index " + std::to_string(j + 1), ok, ok ? "" : "remainder not divisible by x" + std::to_string(j + 1));
    }
    r.set("property_i", pi);
    if (!in.alphas.empty()) {
      const bool ok = check_property_ii(omega, in.alphas);
      r.set("property_ii", ok);
      r.verdict("property ii", ok);
    }
  });
}

Report cmd_deduce(int p, int q, const Options& /*opts*/) {
  return guarded("deduce " + std::to_string(p) + " " + std::to_string(q), [&](Report& r) {
    r.add_input(std::to_string(p) + "," + std::to_string(q));
    if (p < 1 || q < 0) throw InputError("deduce", "need p >= 1 and q >= 0");
    const ProofTrace t = deduce(p, q);
    r.set("trace", trace_json(t));
    int k = 1;
    for (const auto& s : t.steps) {
      std::string l = std::to_string(k++) + ". ";
      switch (s.kind) {
        case TraceStep::Kind::Initial:
          l += to_string(s.target) + " poles within " + to_string(s.result);
          break;
        case TraceStep::Kind::Lemma:
          l += to_string(s.target) + " analytic";
          break;
        case TraceStep::Kind::Equality: {
          std::string sib;
          for (const auto& g : s.siblings) sib += (sib.empty() ? "" : " + ") + to_string(g);
          l += "dbar " + to_string(s.base) + " = +-(" + to_string(s.target) + (sib.empty() ? "" : " + " + sib) + "): " +
               to_string(s.prior) + " meet " + to_string(s.context) + " -> " + to_string(s.result);
          break;
        }
      }
      r.line(l);
    }
    r.verdict("analytic", t.analytic, t.analytic ? "" : "stalled with " + to_string(t.residual));
  });
}

Report cmd_verify_example3(const Options& opts, bool drop_zeta) {
  std::string echo = "example3 --profile-degree " + std::to_string(opts.profile_degree);
  if (opts.seed) echo += " --seed " + std::to_string(*opts.seed);
  if (drop_zeta) echo += " --drop-zeta";
  return guarded(echo, [&](Report& r) {
    Example3Options eo;
    eo.profile_degree = opts.profile_degree;
    eo.seed = opts.seed;
    eo.drop_zeta = drop_zeta;
    const Example3Profiles pr = example3_profiles(eo);
    const Scenario s = builtin_example3(pr, drop_zeta);
    r.add_input(serialize_scenario(s));
    const LinForm target = normalize({1, 1, 0});  // l1 + l2 <-> the two dbar factors

    Stopwatch sw;
    // (a) per-chart certificates
    json certs = json::array();
    for (const auto& c : s.charts) {
      const PoleCertificate cert = chart_certificate(c);
      certs.push_back(certificate_json(cert));
      const bool ok = cert.forms == std::set<LinForm>{target};
      r.line("chart " + c.name + " certificate " + join_forms(cert.forms));
      r.verdict("chart " + c.name + " certificate is {" + target.to_string() + "}", ok);
    }
    r.set("chart_certificates", certs);

    // (b) residues on l1 + l2 = 0 at a generic rational point
    const std::vector<GaussRational> pt{Rational(5, 7), Rational(-5, 7), Rational(3, 11)};
    std::map<std::string, MeroValue> values;
    GaussRational sum;
    int power = 0;
    json res = json::array();
    for (const auto& c : s.charts) {
      values[c.name] = gamma_exact(s, c.name);
      const TokenScalar rv = residue_on(target, values[c.name], pt);
      res.push_back({{"chart", c.name}, {"residue", token_json(rv)}});
      r.line("chart " + c.name + " residue at (5/7,-5/7,3/11): " + to_string(rv));
      if (!rv.coeff.is_zero()) {
        power = rv.twopii_power;
        sum += rv.coeff;
      }
    }
    r.set("residues", res);
    r.verdict("chart residues cancel exactly", sum.is_zero(), "sum " + to_string(TokenScalar{sum, power}));
    r.set_timing("charts", sw.ms());

    // (c) global analyticity at the origin
    MeroValue global = MeroValue::zero(3);
    for (const auto& [name, v] : values) global += v;
    global = global.reduced();
    const auto poles = global.origin_pole_forms();
    r.set("global_value", mero_json(global));
    r.verdict("global value analytic at origin", poles.empty(), poles.empty() ? "" : "poles " + join_forms(poles));

    // (d) value at the origin against -(2 pi i)^3 phi(0) phi2(0) phi3(0), and
    // against the independently computed integrated-by-parts form
    const Rational expected = example3_expected_coefficient(pr);
    const TokenScalar want{GaussRational(expected), 3};
    r.set("expected", token_json(want));
    r.set("orientation_sign", 1);
    if (poles.empty()) {
      const TokenScalar got = value_at_origin(global);
      r.set("value_at_origin", token_json(got));
      r.line("value at origin: " + to_string(got) + "  expected " + to_string(want));
      r.verdict("value at origin equals -(2 pi i)^3 phi(0) phi2(0) phi3(0)", got == want);
      const TokenScalar ibp = value_at_origin(gamma_global(example3_ibp_scenario(pr)));
      r.line("integrated-by-parts form at origin: " + to_string(ibp));
      r.verdict("agrees with integrated-by-parts form", got == ibp);
    } else {
      r.verdict("value at origin equals -(2 pi i)^3 phi(0) phi2(0) phi3(0)", false, "pole at origin");
    }
    r.set_timing("total", sw.ms());
  });
}

}  // namespace rml::cli
