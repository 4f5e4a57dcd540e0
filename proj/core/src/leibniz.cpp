#include "rml/leibniz.hpp"

#include <algorithm>

#include "rml/error.hpp"
#include "rml/mellin.hpp"

namespace rml {

namespace {

// Row-echelon rank test over Q, adding rows one at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols) : ncols_(ncols) {}

  bool try_add(const std::vector<int>& row) {
    std::vector<Rational> v(row.begin(), row.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t piv = pivots_[r];
      if (sgn(v[piv]) == 0) continue;
      const Rational f = v[piv] / rows_[r][piv];
      for (std::size_t j = 0; j < ncols_; ++j) v[j] -= f * rows_[r][j];
    }
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (sgn(v[j]) != 0) {
        rows_.push_back(std::move(v));
        pivots_.push_back(j);
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t ncols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

void next_subsets(int n, int m, std::vector<int> cur, int start, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    next_subsets(n, m, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

RankBasis rank_basis(const IntMatrix& alpha) {
  RankBasis rb;
  if (alpha.empty()) return rb;
  EchelonBasis eb(alpha.front().size());
  for (std::size_t r = 0; r < alpha.size(); ++r)
    if (eb.try_add(alpha[r])) rb.basis.push_back(static_cast<int>(r));
  rb.m = static_cast<int>(rb.basis.size());
  return rb;
}

std::vector<MeroTerm> expand(const ChartSpec& chart) {
  const RankBasis rb = rank_basis(chart.alpha);
  for (int t = 0; t < chart.p(); ++t) {
    if (!chart.unit_flag(t)) continue;
    if (std::find(rb.basis.begin(), rb.basis.end(), t) == rb.basis.end())
      throw Error("ResonantUnits", "chart '" + chart.name + "': dbar row " + std::to_string(t + 1) +
                                       " carries a unit but is dependent on the basis rows");
  }
  const std::set<int> K = derive_K(chart);
  std::vector<std::vector<int>> subsets;
  next_subsets(chart.n(), rb.m, {}, 0, subsets);

  std::vector<MeroTerm> terms;
  for (const auto& I : subsets) {
    IntMatrix A;
    for (int r : rb.basis) {
      std::vector<int> row;
      for (int i : I) row.push_back(chart.alpha[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)]);
      A.push_back(std::move(row));
    }
    const long long d = determinant(A);
    if (d == 0) continue;

    MeroTerm term;
    term.subset = I;
    term.detA = d;
    for (int t = 0; t < chart.p(); ++t) term.numerator_axes.push_back(t);
    for (int i : I) {
      if (K.count(i)) {
        term.dbar_profile.push_back(i);
        continue;
      }
      LinForm mu = normalize(chart.column_form(i));
      auto axis = axis_proportional(mu);
      if (axis) {
        auto it = std::find(term.numerator_axes.begin(), term.numerator_axes.end(), static_cast<int>(*axis));
        if (it != term.numerator_axes.end()) {
          term.numerator_axes.erase(it);
          term.cancelled.emplace_back(i, static_cast<int>(*axis));
          continue;
        }
        for (const auto& [col, ax] : term.cancelled) {
          if (ax == static_cast<int>(*axis))
            throw Error("UniquenessViolated", "chart '" + chart.name + "': columns " + std::to_string(col + 1) +
                                                  " and " + std::to_string(i + 1) + " are both proportional to l" +
                                                  std::to_string(*axis + 1));
        }
      }
      term.denominators.push_back(mu);
      term.denominator_columns.push_back(i);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

HalfSpaceCert halfspace_for(const ChartSpec& chart) {
  HalfSpaceCert h;
  int max_sum = 0;
  for (int i = 0; i < chart.n(); ++i) {
    const int s = chart.column_sum(i);
    if (s == 0) continue;
    max_sum = std::max(max_sum, s);
    h.excluded_poles.insert(normalize(chart.column_form(i)));
  }
  h.eps = Rational(1, std::max(max_sum, 1));
  return h;
}

PoleCertificate chart_certificate(const ChartSpec& chart) {
  PoleCertificate cert;
  cert.scope = chart.name;
  for (const auto& term : expand(chart))
    for (const auto& f : term.denominators) cert.forms.insert(f);
  cert.halfspace = halfspace_for(chart);
  return cert;
}

PoleCertificate global_certificate(const Scenario& scenario, const MeroValue& global_value) {
  PoleCertificate cert;
  cert.scope = "global";
  cert.forms = global_value.reduced().origin_pole_forms();
  bool first = true;
  for (const auto& chart : scenario.charts) {
    HalfSpaceCert h = halfspace_for(chart);
    if (first || h.eps < cert.halfspace.eps) cert.halfspace.eps = h.eps;
    cert.halfspace.excluded_poles.insert(h.excluded_poles.begin(), h.excluded_poles.end());
    first = false;
  }
  if (first) cert.halfspace.eps = 1;
  return cert;
}

PoleCertificate global_certificate(const Scenario& scenario) {
  return global_certificate(scenario, gamma_global(scenario));
}

std::vector<LinForm> shape_violations(const PoleCertificate& cert, int p) {
  std::vector<LinForm> bad;
  for (const auto& f : cert.forms) {
    const auto support = f.support();
    const bool inside = std::all_of(support.begin(), support.end(), [p](std::size_t j) { return static_cast<int>(j) < p; });
    if (!inside || support.size() < 2) bad.push_back(f);
  }
  return bad;
}

}  // namespace rml
