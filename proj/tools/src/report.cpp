#include "rml_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace rml::cli {

using nlohmann::json;

void Report::add_input(const std::string& text) {
  for (unsigned char ch : text) {
    hash_ ^= ch;
    hash_ *= 1099511628211ULL;
  }
  hash_ ^= 0xff;  // separator between inputs
  hash_ *= 1099511628211ULL;
}

std::string Report::digest() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

void Report::verdict(const std::string& name, bool pass, const std::string& detail) {
  verdicts_.push_back({name, pass, detail});
}

void Report::compare(const std::string& name, std::complex<double> value, std::complex<double> reference, double tol) {
  const double scale = std::max(std::abs(reference), 1e-300);
  const double rel = std::abs(value - reference) / scale;
  const bool pass = std::abs(value - reference) <= tol * std::max(std::abs(reference), 1e-300) ||
                    (std::abs(reference) == 0 && std::abs(value) <= tol);
  json& list = results_["comparisons"];
  if (!list.is_array()) list = json::array();
  list.push_back({{"name", name},
                  {"value", complex_json(value)},
                  {"reference", complex_json(reference)},
                  {"rel_error", rel},
                  {"tolerance", tol},
                  {"pass", pass}});
  char buf[64];
  std::snprintf(buf, sizeof buf, "rel %.3e (tol %.1e)", rel, tol);
  verdict(name, pass, format_complex(value) + " vs " + format_complex(reference) + ", " + buf);
}

void Report::set_error(int code, const std::string& message) {
  error_code_ = code;
  error_ = message;
}

bool Report::passed() const {
  if (error_code_ != 0) return false;
  for (const auto& v : verdicts_)
    if (!v.pass) return false;
  return true;
}

int Report::exit_code() const {
  if (error_code_ != 0) return error_code_;
  return passed() ? 0 : 1;
}

std::string Report::render(Format format, bool with_timings) const {
  if (format == Format::Json) {
    json doc;
    doc["command"] = command_;
    doc["inputs_digest"] = digest();
    doc["results"] = results_;
    json vs = json::array();
    for (const auto& v : verdicts_) vs.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    doc["verdicts"] = vs;
    if (error_code_ != 0) doc["error"] = error_;
    doc["exit_code"] = exit_code();
    if (with_timings) doc["timings_ms"] = timings_;
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "rml " << command_ << "\n";
  out << "inputs  " << digest() << "\n";
  for (const auto& l : lines_) out << l << "\n";
  if (!verdicts_.empty()) out << "\n";
  for (const auto& v : verdicts_) {
    out << (v.pass ? "[PASS] " : "[FAIL] ") << v.name;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  if (error_code_ != 0) out << "error: " << error_ << "\n";
  if (with_timings)
    for (auto it = timings_.begin(); it != timings_.end(); ++it)
      out << "time " << it.key() << " " << it.value().get<double>() << " ms\n";
  out << "exit " << exit_code() << "\n";
  return out.str();
}

json rational_json(const Rational& q) {
  auto big = [](const mpz_class& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return json::array({big(q.get_num()), big(q.get_den())});
}

json gauss_json(const GaussRational& z) { return {{"re", rational_json(z.re)}, {"im", rational_json(z.im)}}; }

json mero_json(const MeroValue& v) {
  json num = json::array();
  for (const auto& [e, c] : v.numerator().terms()) num.push_back({{"exps", e}, {"coeff", gauss_json(c)}});
  json den = json::array();
  for (const auto& [f, m] : v.denominator())
    den.push_back({{"form", {{"coeffs", f.coeffs()}, {"const", f.constant()}}}, {"mult", m}});
  return {{"num", num}, {"den", den}, {"twopii_power", v.twopii_power()}, {"text", v.to_string()}};
}

json token_json(const TokenScalar& s) {
  return {{"coeff", gauss_json(s.coeff)}, {"twopii_power", s.twopii_power}, {"text", to_string(s)}};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json linform_json(const LinForm& f) { return {{"coeffs", f.coeffs()}, {"text", f.to_string()}}; }

json certificate_json(const PoleCertificate& c) {
  json forms = json::array();
  for (const auto& f : c.forms) forms.push_back(linform_json(f));
  json excluded = json::array();
  for (const auto& f : c.halfspace.excluded_poles) excluded.push_back(linform_json(f));
  return {{"scope", c.scope}, {"forms", forms}, {"halfspace", {{"eps", rational_json(c.halfspace.eps)}, {"excluded_poles", excluded}}}};
}

json trace_json(const ProofTrace& t) {
  json steps = json::array();
  int k = 1;
  for (const auto& s : t.steps) {
    json j{{"step", k++}, {"target", to_string(s.target)}};
    switch (s.kind) {
      case TraceStep::Kind::Initial:
        j["kind"] = "initial";
        j["result"] = to_string(s.result);
        break;
      case TraceStep::Kind::Lemma:
        j["kind"] = "analytic";
        break;
      case TraceStep::Kind::Equality: {
        j["kind"] = "equality";
        j["base"] = to_string(s.base);
        json sib = json::array();
        for (const auto& g : s.siblings) sib.push_back(to_string(g));
        j["siblings"] = sib;
        j["prior"] = to_string(s.prior);
        j["context"] = to_string(s.context);
        j["result"] = to_string(s.result);
        break;
      }
    }
    steps.push_back(j);
  }
  return {{"goal", to_string(t.goal)}, {"analytic", t.analytic}, {"residual", to_string(t.residual)}, {"steps", steps}};
}

std::string format_complex(std::complex<double> z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string format_forms(const std::set<LinForm>& forms) {
  if (forms.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& f : forms) {
    out += (first ? "" : ", ") + f.to_string();
    first = false;
  }
  return out + "}";
}

}  // namespace rml::cli
