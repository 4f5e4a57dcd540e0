#include "rml/exterior.hpp"

#include <algorithm>

#include "rml/error.hpp"
#include "rml/parallel.hpp"

namespace rml {

namespace {

// Sorts idx ascending; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

bool divisible_by(const QPoly& f, int var) {
  for (const auto& [e, c] : f.terms())
    if (e[static_cast<std::size_t>(var)] == 0) return false;
  return true;
}

}  // namespace

PolyForm PolyForm::basis(int n, const std::vector<int>& idx, const QPoly& c) {
  PolyForm f(n, static_cast<int>(idx.size()));
  f.add(idx, c);
  return f;
}

PolyForm PolyForm::function(const QPoly& c) {
  PolyForm f(static_cast<int>(c.nvars()), 0);
  f.add({}, c);
  return f;
}

QPoly PolyForm::coefficient(const FormIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? QPoly(static_cast<std::size_t>(n_)) : it->second;
}

void PolyForm::add(std::vector<int> idx, const QPoly& c) {
  if (static_cast<int>(idx.size()) != degree_) throw Error("DegreeMismatch", "basis term has the wrong degree");
  if (c.nvars() != static_cast<std::size_t>(n_)) throw Error("ArityMismatch", "coefficient has the wrong arity");
  for (int i : idx)
    if (i < 0 || i >= n_) throw Error("IndexOutOfRange", "differential index out of range");
  const int sign = sort_with_sign(idx);
  if (sign == 0 || c.is_zero()) return;
  QPoly& slot = terms_.try_emplace(idx, QPoly(static_cast<std::size_t>(n_))).first->second;
  if (sign > 0) slot += c;
  else slot -= c;
  if (slot.is_zero()) terms_.erase(idx);
}

void PolyForm::check(const PolyForm& o) const {
  if (o.n_ != n_ || o.degree_ != degree_) throw Error("DegreeMismatch", "adding forms of different shape");
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  check(o);
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  check(o);
  for (const auto& [idx, c] : o.terms_) add(idx, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, c] : terms_) c *= s;
  return *this;
}

std::string PolyForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (int i : idx) out += " dx" + std::to_string(i + 1);
  }
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.n() != b.n()) throw Error("ArityMismatch", "wedge of forms on different spaces");
  PolyForm r(a.n(), a.degree() + b.degree());
  if (r.degree() > a.n()) return r;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add(idx, ca * cb);
    }
  }
  return r;
}

PolyForm d_monomial(const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (std::all_of(alpha.begin(), alpha.end(), [](int v) { return v == 0; }))
    throw Error("ZeroExponent", "d of a constant monomial");
  PolyForm r(n, 1);
  for (int i = 0; i < n; ++i) {
    if (alpha[static_cast<std::size_t>(i)] == 0) continue;
    Exponents e(alpha.begin(), alpha.end());
    e[static_cast<std::size_t>(i)] -= 1;
    QPoly c(static_cast<std::size_t>(n));
    c.add_term(e, Rational(alpha[static_cast<std::size_t>(i)]));
    r.add({i}, c);
  }
  return r;
}

PolyForm restrict_extend(const PolyForm& f, const std::set<int>& S) {
  PolyForm r(f.n(), f.degree());
  for (const auto& [idx, c] : f.terms()) {
    if (std::any_of(idx.begin(), idx.end(), [&](int i) { return S.count(i) > 0; })) continue;
    QPoly restricted = c;
    for (int i : S)
      if (i >= 0 && i < f.n()) restricted = restricted.substitute_constant(static_cast<std::size_t>(i), Rational(0));
    r.add(idx, restricted);
  }
  return r;
}

PolyForm build_omega(const PolyForm& Psi, const std::set<int>& K) {
  const std::vector<int> ks(K.begin(), K.end());
  if (ks.size() > 20) throw Error("TooManyIndices", "|K| is too large for inclusion-exclusion");
  const std::size_t subsets = std::size_t{1} << ks.size();
  auto part = [&](std::size_t mask) {
    if (mask == 0) return PolyForm(Psi.n(), Psi.degree());
    std::set<int> T;
    for (std::size_t b = 0; b < ks.size(); ++b)
      if (mask & (std::size_t{1} << b)) T.insert(ks[b]);
    PolyForm r = restrict_extend(Psi, T);
    if (T.size() % 2 == 0) r *= Rational(-1);
    return r;
  };
  const auto parts = parallel_map(subsets, part);
  PolyForm omega(Psi.n(), Psi.degree());
  for (const auto& p : parts) omega += p;
  return omega;
}

std::map<int, bool> check_property_i(const PolyForm& Psi, const PolyForm& omega, const std::set<int>& K) {
  const PolyForm diff = Psi - omega;
  std::map<int, bool> report;
  for (int j : K) {
    bool ok = true;
    for (const auto& [idx, c] : diff.terms()) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      if (j < 0 || j >= diff.n() || !divisible_by(c, j)) {
        ok = false;
        break;
      }
    }
    report[j] = ok;
  }
  return report;
}

bool check_property_ii(const PolyForm& omega, const std::vector<std::vector<int>>& alphas) {
  PolyForm acc = PolyForm::function(QPoly::constant(static_cast<std::size_t>(omega.n()), Rational(1)));
  for (const auto& a : alphas) {
    if (static_cast<int>(a.size()) != omega.n()) throw Error("ArityMismatch", "exponent row has the wrong length");
    acc = wedge(acc, d_monomial(a));
  }
  return wedge(acc, omega).is_zero();
}

}  // namespace rml
