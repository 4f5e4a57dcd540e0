#include "rml/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "rml/error.hpp"
#include "rml/parallel.hpp"

namespace rml {

namespace {

constexpr double kNodes[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                              0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                              0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                              0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                              0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a, b;
  std::complex<double> value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const ComplexIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const std::complex<double> fc = f(c);
  std::complex<double> kron = fc * kKronrod[7];
  std::complex<double> gauss = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const std::complex<double> sum = f(c - h * kNodes[j]) + f(c + h * kNodes[j]);
    kron += sum * kKronrod[j];
    if (j % 2 == 1) gauss += sum * kGauss[j / 2];
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

// Neumaier-compensated complex sum.
class Accumulator {
 public:
  void add(std::complex<double> v) {
    add_part(re_, cre_, v.real());
    add_part(im_, cim_, v.imag());
  }
  std::complex<double> total() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void add_part(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

QuadratureResult finish(std::vector<Interval> intervals, double abs_tol, double rel_tol) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  Accumulator value;
  double err = 0;
  for (const auto& iv : intervals) {
    value.add(iv.value);
    err += iv.error;
  }
  QuadratureResult r{value.total(), err, true};
  r.converged = err <= std::max(abs_tol, rel_tol * std::abs(r.value));
  return r;
}

std::vector<Interval> adapt(const ComplexIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                            int max_intervals) {
  std::priority_queue<Interval> heap;
  heap.push(gk15(f, a, b));
  std::complex<double> total = heap.top().value;
  double err = heap.top().error;
  while (static_cast<int>(heap.size()) < max_intervals && err > std::max(abs_tol, rel_tol * std::abs(total))) {
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval exhausted in double precision
      heap.push(worst);
      break;
    }
    Interval left = gk15(f, worst.a, mid), right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  std::vector<Interval> out;
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  return out;
}

// Sign of the permutation sorting seq ascending (entries distinct).
int sort_sign(const std::vector<int>& seq) {
  std::vector<int> v = seq;
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

// Coefficient of dxbar_I (I increasing) in the wedge of the p one-forms
// sum_i alpha(t)_i dxbar_i / xbar_i: an explicit sum over orderings of I.
double wedge_coefficient(const IntMatrix& alpha, const std::vector<int>& I) {
  std::vector<int> perm = I;
  double total = 0;
  do {
    double prod = 1;
    for (std::size_t t = 0; t < perm.size(); ++t) prod *= alpha[t][static_cast<std::size_t>(perm[t])];
    if (prod != 0) total += sort_sign(perm) * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// int_C x^A xbar^B |x|^{2 mu} rho(|x|^2) dA in polar coordinates.
QuadratureResult planar_integral(int A, int B, std::complex<double> mu, const RadialProfile& rho, double rel_tol) {
  const int w = A - B;
  const int L = std::max(16, 2 * std::abs(w) + 2);
  std::complex<double> angular = 0;
  for (int j = 0; j < L; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / L;
    angular += std::polar(1.0, w * theta);
  }
  angular *= 2.0 * std::numbers::pi / L;
  if (std::abs(angular) < 1e-12) return {0.0, 0.0, true};

  const std::complex<double> e = static_cast<double>(A + B + 1) + 2.0 * mu;
  auto radial = [&](double r) -> std::complex<double> {
    if (r <= 0) return 0.0;
    return std::exp(e * std::log(r)) * rho.evaluate(r * r);
  };
  std::vector<double> breaks;
  for (const auto& k : rho.knots) breaks.push_back(std::sqrt(to_double(k)));
  QuadratureResult rad = integrate_piecewise(radial, breaks, 1e-300, rel_tol);
  return {angular * rad.value, std::abs(angular) * rad.error, rad.converged};
}

}  // namespace

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                                    int max_intervals) {
  if (!(b > a)) return {0.0, 0.0, true};
  return finish(adapt(f, a, b, abs_tol, rel_tol, max_intervals), abs_tol, rel_tol);
}

QuadratureResult integrate_piecewise(const ComplexIntegrand& f, std::vector<double> breaks, double abs_tol,
                                     double rel_tol) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Interval> all;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    auto part = adapt(f, breaks[j], breaks[j + 1], abs_tol, rel_tol, 4000);
    all.insert(all.end(), part.begin(), part.end());
  }
  if (all.empty()) return {0.0, 0.0, true};
  return finish(std::move(all), abs_tol, rel_tol);
}

QuadratureResult gamma_quadrature(const Scenario& scenario, const std::string& chart_name,
                                  const std::vector<std::complex<double>>& lambda, double rel_tol) {
  const ChartSpec& chart = scenario.chart(chart_name);
  const SeparableTestForm& form = scenario.testform(chart_name);
  const int n = chart.n(), p = chart.p();
  if (n > 3) throw Error("DimensionTooLarge", "quadrature supports n <= 3, got n = " + std::to_string(n));
  if (lambda.size() != static_cast<std::size_t>(p + chart.q()))
    throw Error("ArityMismatch", "lambda point has wrong length");
  for (const auto& l : lambda)
    if (l.real() < 2.0) throw Error("OutsideConvergenceZone", "quadrature needs Re l_j >= 2");

  std::complex<double> lambda_product = 1.0;
  for (int t = 0; t < p; ++t) lambda_product *= lambda[static_cast<std::size_t>(t)];

  auto term_value = [&](std::size_t j) -> QuadratureResult {
    const TestFormTerm& term = form.terms[j];
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (std::find(term.dbar_slots.begin(), term.dbar_slots.end(), i) == term.dbar_slots.end()) I.push_back(i);
    const double wc = wedge_coefficient(chart.alpha, I);
    if (wc == 0) return {0.0, 0.0, true};

    std::vector<int> seq;  // differentials: dx_i -> 2i, dxbar_i -> 2i+1
    for (int i : I) seq.push_back(2 * i + 1);
    for (int i = 0; i < n; ++i) seq.push_back(2 * i);
    for (int i : term.dbar_slots) seq.push_back(2 * i + 1);

    std::complex<double> value = term.coeff.to_complex() * static_cast<double>(chart.sign * sort_sign(seq)) * wc *
                                 lambda_product;
    double rel_err = 0;
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto& f = term.factors[ui];
      std::complex<double> mu = 0;
      for (int t = 0; t < chart.p(); ++t) mu += static_cast<double>(chart.alpha[static_cast<std::size_t>(t)][ui]) * lambda[static_cast<std::size_t>(t)];
      for (int s = 0; s < chart.q(); ++s)
        mu += static_cast<double>(chart.beta[static_cast<std::size_t>(s)][ui]) * lambda[static_cast<std::size_t>(p + s)];
      const bool in_I = std::binary_search(I.begin(), I.end(), i);
      const int A = f.a + chart.jac[ui] - scenario.signature.N * chart.column_sum(i);
      const int B = f.b - (in_I ? 1 : 0);
      QuadratureResult planar = planar_integral(A, B, mu, f.rho, rel_tol * 1e-2);
      if (planar.value == std::complex<double>(0.0)) return {0.0, 0.0, planar.converged};
      value *= std::complex<double>(0.0, -2.0) * planar.value;  // dx ^ dxbar = -2i dA
      rel_err += planar.error / std::abs(planar.value);
      converged = converged && planar.converged;
    }
    return {value, rel_err * std::abs(value), converged};
  };

  const auto parts = parallel_map(form.terms.size(), term_value);
  Accumulator total;
  QuadratureResult out{0.0, 0.0, true};
  for (const auto& part : parts) {
    total.add(part.value);
    out.error += part.error;
    out.converged = out.converged && part.converged;
  }
  out.value = total.total();
  return out;
}

}  // namespace rml
