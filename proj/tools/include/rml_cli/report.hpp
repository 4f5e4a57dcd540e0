#pragma once

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rml/leibniz.hpp"
#include "rml/mero.hpp"
#include "rml/pole_calculus.hpp"

namespace rml::cli {

enum class Format { Table, Json };

struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Result of one command: an echo of the invocation, a digest of every
/// input, structured results, and pass/fail verdicts.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add_input(const std::string& text);  // folded into the digest
  void set(const std::string& key, nlohmann::json value) { results_[key] = std::move(value); }
  void line(const std::string& text) { lines_.push_back(text); }
  void verdict(const std::string& name, bool pass, const std::string& detail = "");
  /// Numeric comparison: records value, reference, tolerance and verdict.
  void compare(const std::string& name, std::complex<double> value, std::complex<double> reference, double tol);
  void set_timing(const std::string& key, double ms) { timings_[key] = ms; }
  void set_error(int code, const std::string& message);

  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  const nlohmann::json& results() const { return results_; }
  bool passed() const;
  int exit_code() const;  // 0 pass, 1 violation, 2 input error
  std::string digest() const;

  std::string render(Format format, bool with_timings) const;

 private:
  std::string command_;
  std::uint64_t hash_ = 1469598103934665603ULL;
  nlohmann::json results_ = nlohmann::json::object();
  nlohmann::json timings_ = nlohmann::json::object();
  std::vector<std::string> lines_;
  std::vector<Verdict> verdicts_;
  int error_code_ = 0;
  std::string error_;
};

nlohmann::json rational_json(const Rational& q);
nlohmann::json gauss_json(const GaussRational& z);
nlohmann::json mero_json(const MeroValue& v);
nlohmann::json token_json(const TokenScalar& s);
nlohmann::json complex_json(std::complex<double> z);
nlohmann::json linform_json(const LinForm& f);
nlohmann::json certificate_json(const PoleCertificate& c);
nlohmann::json trace_json(const ProofTrace& t);

std::string format_complex(std::complex<double> z);
std::string format_forms(const std::set<LinForm>& forms);

}  // namespace rml::cli
