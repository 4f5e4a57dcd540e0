#include "rml/chart.hpp"

#include <cmath>

#include "rml/error.hpp"

namespace rml {

namespace {

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void check_matrix(const IntMatrix& m, std::size_t rows, std::size_t cols, const std::string& path) {
  if (m.size() != rows)
    throw InputError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != cols)
      throw InputError(idx(path, r), "expected " + std::to_string(cols) + " entries, found " + std::to_string(m[r].size()));
    for (std::size_t c = 0; c < cols; ++c)
      if (m[r][c] < 0) throw InputError(idx(idx(path, r), c), "negative exponent");
  }
}

long long det_int(IntMatrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

long long determinant(const IntMatrix& m) { return det_int(m); }

void ProblemSignature::validate() const {
  if (n < 1) throw InputError("signature.n", "must be >= 1");
  if (p < 0) throw InputError("signature.p", "must be >= 0");
  if (q < 0) throw InputError("signature.q", "must be >= 0");
  if (p + q < 1) throw InputError("signature", "p + q must be >= 1");
  if (p > n) throw InputError("signature.p", "must not exceed n (test forms have bidegree (n, n-p))");
  if (N < 1) throw InputError("signature.N", "must be >= 1");
}

RadialProfile RadialProfile::on_unit_interval(std::vector<Rational> coeffs) {
  RadialProfile r;
  r.knots = {Rational(0), Rational(1)};
  r.pieces = {std::move(coeffs)};
  return r;
}

bool RadialProfile::unit_supported() const {
  return knots.size() == 2 && sgn(knots[0]) == 0 && knots[1] == 1;
}

bool RadialProfile::is_zero() const {
  for (const auto& piece : pieces)
    for (const auto& c : piece)
      if (sgn(c) != 0) return false;
  return true;
}

Rational RadialProfile::value_at_zero() const {
  if (pieces.empty() || pieces.front().empty()) return Rational(0);
  return pieces.front().front();
}

double RadialProfile::evaluate(double t) const {
  if (knots.empty() || t < to_double(knots.front()) || t > to_double(knots.back())) return 0.0;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (t <= to_double(knots[j + 1]) || j + 1 == pieces.size()) {
      double acc = 0.0;
      for (std::size_t d = pieces[j].size(); d-- > 0;) acc = acc * t + to_double(pieces[j][d]);
      return acc;
    }
  }
  return 0.0;
}

double RadialProfile::integrate_power(int e, double lo, double hi) const {
  double total = 0.0;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const double a = std::max(lo, to_double(knots[j]));
    const double b = std::min(hi, to_double(knots[j + 1]));
    if (b <= a) continue;
    for (std::size_t d = 0; d < pieces[j].size(); ++d) {
      const double k = static_cast<double>(e) + static_cast<double>(d) + 1.0;
      total += to_double(pieces[j][d]) * (std::pow(b, k) - std::pow(a, k)) / k;
    }
  }
  return total;
}

void RadialProfile::validate(const std::string& path) const {
  if (knots.size() < 2) throw InputError(path + ".knots", "need at least two knots");
  if (sgn(knots.front()) != 0) throw InputError(path + ".knots[0]", "first knot must be 0");
  for (std::size_t j = 1; j < knots.size(); ++j)
    if (knots[j] <= knots[j - 1]) throw InputError(idx(path + ".knots", j), "knots must be strictly increasing");
  if (pieces.size() + 1 != knots.size())
    throw InputError(path + ".pieces", "expected " + std::to_string(knots.size() - 1) + " pieces");
}

void SeparableTestForm::validate(int n, int p, const std::string& path) const {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    const std::string tp = idx(path + ".terms", t);
    if (term.factors.size() != static_cast<std::size_t>(n))
      throw InputError(tp + ".factors", "expected " + std::to_string(n) + " factors");
    for (std::size_t i = 0; i < term.factors.size(); ++i) {
      const auto& f = term.factors[i];
      const std::string fp = idx(tp + ".factors", i);
      if (f.a < 0) throw InputError(fp + ".a", "negative exponent");
      if (f.b < 0) throw InputError(fp + ".b", "negative exponent");
      f.rho.validate(fp + ".rho");
    }
    if (term.dbar_slots.size() != static_cast<std::size_t>(n - p))
      throw InputError(tp + ".dbar_slots", "expected " + std::to_string(n - p) + " slots for an (n, n-p)-form");
    for (std::size_t s = 0; s < term.dbar_slots.size(); ++s) {
      const int v = term.dbar_slots[s];
      if (v < 0 || v >= n) throw InputError(idx(tp + ".dbar_slots", s), "index out of range");
      if (s > 0 && v <= term.dbar_slots[s - 1])
        throw InputError(idx(tp + ".dbar_slots", s), "slots must be strictly increasing");
    }
  }
}

std::vector<std::int64_t> ChartSpec::column_form(int i) const {
  std::vector<std::int64_t> c;
  c.reserve(alpha.size() + beta.size());
  for (const auto& row : alpha) c.push_back(row.at(static_cast<std::size_t>(i)));
  for (const auto& row : beta) c.push_back(row.at(static_cast<std::size_t>(i)));
  return c;
}

int ChartSpec::column_sum(int i) const {
  int s = 0;
  for (auto v : column_form(i)) s += static_cast<int>(v);
  return s;
}

void ChartSpec::validate(const ProblemSignature& sig, const std::string& path) const {
  if (name.empty()) throw InputError(path + ".name", "chart name must be nonempty");
  const auto n = static_cast<std::size_t>(sig.n);
  check_matrix(alpha, static_cast<std::size_t>(sig.p), n, path + ".alpha");
  check_matrix(beta, static_cast<std::size_t>(sig.q), n, path + ".beta");
  if (jac.size() != n) throw InputError(path + ".jac", "expected " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i)
    if (jac[i] < 0) throw InputError(idx(path + ".jac", i), "negative exponent");
  if (sign != 1 && sign != -1) throw InputError(path + ".sign", "must be +1 or -1");
  if (!units.empty() && units.size() != static_cast<std::size_t>(sig.p + sig.q))
    throw InputError(path + ".units", "expected p+q flags");
  if (!unit_chart) {
    for (std::size_t r = 0; r < alpha.size(); ++r) {
      bool nonzero = false;
      for (int v : alpha[r]) nonzero = nonzero || v > 0;
      if (!nonzero) throw InputError(idx(path + ".alpha", r), "zero row (f is a unit) requires unit_chart");
    }
  }
}

std::set<int> derive_K(const ChartSpec& chart) {
  std::set<int> K;
  for (const auto& row : chart.beta)
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] > 0) K.insert(static_cast<int>(i));
  return K;
}

bool is_k_smooth(const SeparableTestForm& form, const std::set<int>& K) {
  for (const auto& term : form.terms) {
    for (int i : K) {
      bool has_slot = false;
      for (int s : term.dbar_slots) has_slot = has_slot || s == i;
      if (!has_slot && term.factors.at(static_cast<std::size_t>(i)).b < 1) return false;
    }
  }
  return true;
}

const ChartSpec& Scenario::chart(const std::string& name) const {
  for (const auto& c : charts)
    if (c.name == name) return c;
  throw Error("UnknownChart", "no chart named '" + name + "'");
}

const SeparableTestForm& Scenario::testform(const std::string& name) const {
  auto it = testforms.find(name);
  if (it == testforms.end()) throw Error("MissingTestForm", "no test form for chart '" + name + "'");
  return it->second;
}

void Scenario::validate() const {
  signature.validate();
  std::set<std::string> names;
  for (std::size_t c = 0; c < charts.size(); ++c) {
    const std::string path = idx("charts", c);
    charts[c].validate(signature, path);
    if (!names.insert(charts[c].name).second) throw InputError(path + ".name", "duplicate chart name '" + charts[c].name + "'");
  }
  for (const auto& [name, form] : testforms) {
    if (!names.count(name)) throw InputError("testforms." + name, "test form for unknown chart");
    form.validate(signature.n, signature.p, "testforms." + name);
  }
}

ChartSpec pullback_chart(const ChartSpec& base, const IntMatrix& M, const std::string& name) {
  const std::size_t n = base.jac.size();
  if (M.size() != n) throw Error("ArityMismatch", "monomial map must be n x n");
  const long long d = det_int(M);
  if (std::llabs(d) != 1) throw Error("NonUnimodular", "monomial map determinant must be +-1");
  auto pull = [&](const std::vector<int>& e) {
    std::vector<int> out(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out[i] += e[k] * M[k].at(i);
    return out;
  };
  ChartSpec c;
  c.name = name;
  for (const auto& row : base.alpha) c.alpha.push_back(pull(row));
  for (const auto& row : base.beta) c.beta.push_back(pull(row));
  c.jac = pull(base.jac);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) c.jac[i] += M[k][i];
  for (std::size_t i = 0; i < n; ++i) c.jac[i] -= 1;
  for (std::size_t i = 0; i < n; ++i)
    if (c.jac[i] < 0) throw Error("NonUnimodular", "negative Jacobian exponent");
  c.sign = base.sign * static_cast<int>(d);
  c.units = base.units;
  c.unit_chart = base.unit_chart;
  return c;
}

}  // namespace rml
