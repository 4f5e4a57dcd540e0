#include "rml/tube.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rml/error.hpp"
#include "rml/mellin.hpp"
#include "rml/quadrature.hpp"

namespace rml {

namespace {

const std::complex<double> kTwoPiI(0.0, 2.0 * std::numbers::pi);

int orientation_sign(int q) { return (q * (q - 1) / 2) % 2 == 0 ? 1 : -1; }

bool slots_match(const TubeSpec& spec, const TestFormTerm& term) {
  if (static_cast<int>(term.dbar_slots.size()) != spec.q) return false;
  for (int s = 0; s < spec.q; ++s)
    if (term.dbar_slots[static_cast<std::size_t>(s)] != spec.p + s) return false;
  return true;
}

std::complex<double> aitken(std::complex<double> x0, std::complex<double> x1, std::complex<double> x2) {
  const std::complex<double> d1 = x1 - x0, d2 = x2 - x1;
  const std::complex<double> den = d2 - d1;
  if (std::abs(den) <= 1e-14 * (std::abs(d1) + std::abs(d2)) || std::abs(den) < 1e-300) return x2;
  return x2 - d2 * d2 / den;
}

}  // namespace

TubeSpec tube_spec_from(const Scenario& scenario, const std::string& chart_name) {
  const ChartSpec& c = scenario.chart(chart_name);
  TubeSpec spec;
  spec.p = c.p();
  spec.q = c.q();
  spec.N = scenario.signature.N;
  if (c.n() != spec.n()) throw Error("UnsupportedTube", "diagonal tubes need n = p + q");
  if (c.sign != 1) throw Error("UnsupportedTube", "diagonal tubes need orientation sign +1");
  for (int v : c.jac)
    if (v != 0) throw Error("UnsupportedTube", "diagonal tubes carry no Jacobian factor");
  auto row_of = [&](int j) -> const std::vector<int>& {
    return j < spec.p ? c.alpha[static_cast<std::size_t>(j)] : c.beta[static_cast<std::size_t>(j - spec.p)];
  };
  for (int j = 0; j < spec.n(); ++j) {
    const auto& row = row_of(j);
    for (int i = 0; i < spec.n(); ++i) {
      const int v = row[static_cast<std::size_t>(i)];
      if ((i == j) != (v > 0))
        throw Error("UnsupportedTube", "row " + std::to_string(j + 1) + " is not a power of x" + std::to_string(j + 1));
    }
    spec.k.push_back(row[static_cast<std::size_t>(j)]);
  }
  return spec;
}

std::vector<std::complex<double>> tube_variable_factors(const TubeSpec& spec, const TestFormTerm& term,
                                                        const std::vector<double>& eps) {
  std::vector<std::complex<double>> out;
  for (int j = 0; j < spec.n(); ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const auto& f = term.factors[uj];
    const int shift = spec.N * spec.k[uj];
    const double r2 = std::pow(eps[uj], 1.0 / spec.k[uj]);  // |x_j|^2 on the boundary of the tube
    if (j < spec.p) {
      // circle |x|^2 = r2: xbar = r2 / x, so the integrand is r2^b x^(a - shift - b) rho(r2) dx
      out.push_back(f.a - shift - f.b == -1 ? kTwoPiI * std::pow(r2, f.b) * f.rho.evaluate(r2) : 0.0);
    } else {
      // {|x|^2 > r2}: dx ^ dxbar = -2i dA and the angular integral selects a - shift = b
      const double tail = f.rho.integrate_power(f.b, r2, std::max(r2, to_double(f.rho.support_end())));
      out.push_back(f.a - shift == f.b ? -kTwoPiI * tail : 0.0);
    }
  }
  return out;
}

std::complex<double> tube_integral(const TubeSpec& spec, const SeparableTestForm& form, const std::vector<double>& eps) {
  if (eps.size() != static_cast<std::size_t>(spec.n())) throw Error("ArityMismatch", "eps has wrong length");
  std::complex<double> total = 0;
  for (const auto& term : form.terms) {
    if (!slots_match(spec, term)) continue;
    std::complex<double> v = term.coeff.to_complex() * static_cast<double>(orientation_sign(spec.q));
    for (const auto& f : tube_variable_factors(spec, term, eps)) v *= f;
    total += v;
  }
  return total;
}

std::vector<double> AdmissiblePath::eps_at(double t, int count) const {
  std::vector<double> eps;
  for (int j = 1; j <= count; ++j) eps.push_back(std::pow(t, std::pow(static_cast<double>(M), count - j)));
  return eps;
}

LimitResult admissible_limit(const TubeSpec& spec, const SeparableTestForm& form, const AdmissiblePath& path,
                             double tol) {
  if (path.M < 2) throw Error("BadPath", "path exponent M must be at least 2");
  LimitResult out;
  double t = path.t0;
  for (int i = 0; i < path.samples; ++i, t *= 0.5) out.samples.push_back(tube_integral(spec, form, path.eps_at(t, spec.n())));

  // Repeated Aitken table; keep the level whose last two entries agree best.
  std::vector<std::complex<double>> level = out.samples;
  out.value = level.back();
  out.error = level.size() >= 2 ? std::abs(level.back() - level[level.size() - 2]) : INFINITY;
  for (int d = 0; d < path.depth && level.size() >= 3; ++d) {
    std::vector<std::complex<double>> next;
    for (std::size_t i = 0; i + 2 < level.size(); ++i) next.push_back(aitken(level[i], level[i + 1], level[i + 2]));
    level = std::move(next);
    if (level.size() < 2) break;
    const double err = std::abs(level.back() - level[level.size() - 2]);
    if (err < out.error) {
      out.error = err;
      out.value = level.back();
    }
  }
  out.converged = out.error <= tol * std::max(1.0, std::abs(out.value));
  return out;
}

MellinReport mellin_check(const Scenario& scenario, const std::string& chart,
                          const std::vector<std::vector<std::complex<double>>>& points, double tol) {
  const TubeSpec spec = tube_spec_from(scenario, chart);
  if (spec.n() > 2) throw Error("DimensionTooLarge", "mellin_check supports p + q <= 2");
  const SeparableTestForm& form = scenario.testform(chart);
  const MeroValue exact = gamma_exact(scenario, chart);

  // s_j ranges over [0, S_j] with S_j = (largest knot)^k_j; knots^k_j are breakpoints.
  std::vector<std::vector<double>> breaks(static_cast<std::size_t>(spec.n()));
  for (int j = 0; j < spec.n(); ++j) {
    auto& b = breaks[static_cast<std::size_t>(j)];
    b.push_back(0.0);
    for (const auto& term : form.terms)
      for (const auto& k : term.factors[static_cast<std::size_t>(j)].rho.knots)
        b.push_back(std::pow(to_double(k), spec.k[static_cast<std::size_t>(j)]));
  }

  MellinReport report;
  for (const auto& lambda : points) {
    if (lambda.size() != static_cast<std::size_t>(spec.n())) throw Error("ArityMismatch", "lambda point has wrong length");
    MellinPoint pt;
    pt.lambda = lambda;
    const double inner_tol = tol * 1e-3;
    bool converged = true;
    auto weight = [&](std::size_t j, double s) { return std::exp((lambda[j] - 1.0) * std::log(s)); };
    QuadratureResult q;
    if (spec.n() == 1) {
      q = integrate_piecewise([&](double s) { return s <= 0 ? 0.0 : tube_integral(spec, form, {s}) * weight(0, s); },
                              breaks[0], 1e-300, inner_tol);
    } else {
      q = integrate_piecewise(
          [&](double s1) -> std::complex<double> {
            if (s1 <= 0) return 0.0;
            QuadratureResult inner = integrate_piecewise(
                [&](double s2) { return s2 <= 0 ? 0.0 : tube_integral(spec, form, {s1, s2}) * weight(1, s2); },
                breaks[1], 1e-300, inner_tol);
            converged = converged && inner.converged;
            return inner.value * weight(0, s1);
          },
          breaks[0], 1e-300, inner_tol);
    }
    pt.numeric = q.value;
    for (const auto& l : lambda) pt.numeric *= l;
    pt.converged = converged && q.converged;
    pt.exact = exact.evaluate(lambda);

    const double scale = std::max(std::abs(pt.exact), std::abs(pt.numeric));
    if (scale < 1e-300) {
      pt.sign = 0;
      pt.rel_error = 0.0;
    } else {
      pt.sign = std::real(pt.numeric * std::conj(pt.exact)) >= 0 ? 1 : -1;
      pt.rel_error = std::abs(pt.numeric - static_cast<double>(pt.sign) * pt.exact) / scale;
    }
    pt.pass = pt.rel_error <= tol;
    if (pt.sign != 0) {
      if (report.resolved_sign == 0) report.resolved_sign = pt.sign;
      else if (report.resolved_sign != pt.sign) report.sign_consistent = false;
    }
    report.pass = report.pass && pt.pass;
    report.points.push_back(std::move(pt));
  }
  report.pass = report.pass && report.sign_consistent;
  return report;
}

}  // namespace rml
