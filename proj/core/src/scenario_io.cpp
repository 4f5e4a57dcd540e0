#include "rml/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rml/builtin.hpp"
#include "rml/error.hpp"

namespace rml {

using nlohmann::json;

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key, "missing field");
  return *it;
}

long long get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  return j.get<long long>();
}

mpz_class get_bigint(const json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError(path, "malformed integer string");
    return z;
  }
  throw InputError(path, "expected an integer");
}

Rational get_rational(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw InputError(path, "expected a [numerator, denominator] pair");
  mpz_class num = get_bigint(j[0], path + "[0]");
  mpz_class den = get_bigint(j[1], path + "[1]");
  if (den == 0) throw InputError(path + "[1]", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json bigint_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json rational_json(const Rational& q) { return json::array({bigint_json(q.get_num()), bigint_json(q.get_den())}); }

IntMatrix get_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of rows");
  IntMatrix m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = at(path, r);
    if (!j[r].is_array()) throw InputError(rp, "expected an array");
    std::vector<int> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      long long v = get_int(j[r][c], at(rp, c));
      if (v < 0) throw InputError(at(rp, c), "negative exponent");
      row.push_back(static_cast<int>(v));
    }
    m.push_back(std::move(row));
  }
  return m;
}

RadialProfile get_profile(const json& j, const std::string& path) {
  RadialProfile rho;
  const json& knots = require(j, "knots", path);
  if (!knots.is_array()) throw InputError(path + ".knots", "expected an array");
  for (std::size_t k = 0; k < knots.size(); ++k) rho.knots.push_back(get_rational(knots[k], at(path + ".knots", k)));
  const json& pieces = require(j, "pieces", path);
  if (!pieces.is_array()) throw InputError(path + ".pieces", "expected an array");
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const std::string pp = at(path + ".pieces", k);
    if (!pieces[k].is_array()) throw InputError(pp, "expected an array of coefficients");
    std::vector<Rational> coeffs;
    for (std::size_t d = 0; d < pieces[k].size(); ++d) coeffs.push_back(get_rational(pieces[k][d], at(pp, d)));
    rho.pieces.push_back(std::move(coeffs));
  }
  rho.validate(path);
  return rho;
}

SeparableTestForm get_testform(const json& j, const std::string& path) {
  SeparableTestForm form;
  const json& terms = require(j, "terms", path);
  if (!terms.is_array()) throw InputError(path + ".terms", "expected an array");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = at(path + ".terms", t);
    TestFormTerm term;
    const json& coeff = require(terms[t], "coeff", tp);
    term.coeff.re = get_rational(require(coeff, "re", tp + ".coeff"), tp + ".coeff.re");
    term.coeff.im = coeff.contains("im") ? get_rational(coeff["im"], tp + ".coeff.im") : Rational(0);
    const json& factors = require(terms[t], "factors", tp);
    if (!factors.is_array()) throw InputError(tp + ".factors", "expected an array");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::string fp = at(tp + ".factors", i);
      VariableFactor f;
      f.a = static_cast<int>(get_int(require(factors[i], "a", fp), fp + ".a"));
      f.b = static_cast<int>(get_int(require(factors[i], "b", fp), fp + ".b"));
      if (f.a < 0) throw InputError(fp + ".a", "negative exponent");
      if (f.b < 0) throw InputError(fp + ".b", "negative exponent");
      f.rho = get_profile(require(factors[i], "rho", fp), fp + ".rho");
      term.factors.push_back(std::move(f));
    }
    const json& slots = require(terms[t], "dbar_slots", tp);
    if (!slots.is_array()) throw InputError(tp + ".dbar_slots", "expected an array");
    for (std::size_t s = 0; s < slots.size(); ++s)
      term.dbar_slots.push_back(static_cast<int>(get_int(slots[s], at(tp + ".dbar_slots", s))) - 1);
    form.terms.push_back(std::move(term));
  }
  return form;
}

json profile_json(const RadialProfile& rho) {
  json knots = json::array();
  for (const auto& k : rho.knots) knots.push_back(rational_json(k));
  json pieces = json::array();
  for (const auto& piece : rho.pieces) {
    json cs = json::array();
    for (const auto& c : piece) cs.push_back(rational_json(c));
    pieces.push_back(cs);
  }
  return json{{"knots", knots}, {"pieces", pieces}};
}

PolyForm get_polyform(const json& j, const std::string& path) {
  const int degree = static_cast<int>(get_int(require(j, "degree", path), path + ".degree"));
  const json& terms = require(j, "terms", path);
  if (!terms.is_array()) throw InputError(path + ".terms", "expected an array");
  long long n = -1;
  if (j.contains("n")) n = get_int(j["n"], path + ".n");
  for (const auto& t : terms)
    if (n < 0 && t.is_object() && t.contains("poly") && t["poly"].is_array() && !t["poly"].empty() &&
        t["poly"][0].is_object() && t["poly"][0].contains("exps") && t["poly"][0]["exps"].is_array())
      n = static_cast<long long>(t["poly"][0]["exps"].size());
  if (n < 1) throw InputError(path + ".n", "cannot determine the number of variables");
  if (degree < 0 || degree > n) throw InputError(path + ".degree", "degree out of range");
  PolyForm form(static_cast<int>(n), degree);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = at(path + ".terms", t);
    const json& idx = require(terms[t], "idx", tp);
    if (!idx.is_array()) throw InputError(tp + ".idx", "expected an array");
    std::vector<int> ids;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const long long v = get_int(idx[k], at(tp + ".idx", k));
      if (v < 1 || v > n) throw InputError(at(tp + ".idx", k), "index out of range");
      ids.push_back(static_cast<int>(v - 1));
    }
    if (static_cast<int>(ids.size()) != degree) throw InputError(tp + ".idx", "expected " + std::to_string(degree) + " indices");
    const json& poly = require(terms[t], "poly", tp);
    if (!poly.is_array()) throw InputError(tp + ".poly", "expected an array of monomials");
    QPoly c(static_cast<std::size_t>(n));
    for (std::size_t m = 0; m < poly.size(); ++m) {
      const std::string mp = at(tp + ".poly", m);
      const json& exps = require(poly[m], "exps", mp);
      if (!exps.is_array() || static_cast<long long>(exps.size()) != n)
        throw InputError(mp + ".exps", "expected " + std::to_string(n) + " exponents");
      Exponents e;
      for (std::size_t k = 0; k < exps.size(); ++k) {
        const long long v = get_int(exps[k], at(mp + ".exps", k));
        if (v < 0) throw InputError(at(mp + ".exps", k), "negative exponent");
        e.push_back(static_cast<int>(v));
      }
      c.add_term(e, get_rational(require(poly[m], "coeff", mp), mp + ".coeff"));
    }
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError(tp + ".idx", "repeated differential");
    form.add(ids, c);
  }
  return form;
}

json polyform_json(const PolyForm& f) {
  json terms = json::array();
  for (const auto& [idx, c] : f.terms()) {
    json ids = json::array();
    for (int i : idx) ids.push_back(i + 1);
    json poly = json::array();
    for (const auto& [e, q] : c.terms()) poly.push_back({{"exps", e}, {"coeff", rational_json(q)}});
    terms.push_back({{"idx", ids}, {"poly", poly}});
  }
  return {{"n", f.n()}, {"degree", f.degree()}, {"terms", terms}};
}

json parse_document(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError("$", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Scenario parse_scenario(std::string_view document) {
  const json doc = parse_document(document);
  Scenario s;
  const json& sig = require(doc, "signature", "$");
  s.signature.n = static_cast<int>(get_int(require(sig, "n", "signature"), "signature.n"));
  s.signature.p = static_cast<int>(get_int(require(sig, "p", "signature"), "signature.p"));
  s.signature.q = static_cast<int>(get_int(require(sig, "q", "signature"), "signature.q"));
  s.signature.N = sig.contains("N") ? static_cast<int>(get_int(sig["N"], "signature.N")) : 1;
  s.signature.validate();

  const json& charts = require(doc, "charts", "$");
  if (!charts.is_array()) throw InputError("charts", "expected an array");
  for (std::size_t c = 0; c < charts.size(); ++c) {
    const std::string cp = at("charts", c);
    const json& cj = charts[c];
    ChartSpec chart;
    const json& name = require(cj, "name", cp);
    if (!name.is_string()) throw InputError(cp + ".name", "expected a string");
    chart.name = name.get<std::string>();
    chart.alpha = cj.contains("alpha") ? get_matrix(cj["alpha"], cp + ".alpha") : IntMatrix{};
    chart.beta = cj.contains("beta") ? get_matrix(cj["beta"], cp + ".beta") : IntMatrix{};
    if (cj.contains("jac")) {
      const json& jac = cj["jac"];
      if (!jac.is_array()) throw InputError(cp + ".jac", "expected an array");
      for (std::size_t i = 0; i < jac.size(); ++i) {
        long long v = get_int(jac[i], at(cp + ".jac", i));
        if (v < 0) throw InputError(at(cp + ".jac", i), "negative exponent");
        chart.jac.push_back(static_cast<int>(v));
      }
    } else {
      chart.jac.assign(static_cast<std::size_t>(s.signature.n), 0);
    }
    chart.sign = cj.contains("sign") ? static_cast<int>(get_int(cj["sign"], cp + ".sign")) : 1;
    if (cj.contains("units")) {
      const json& u = cj["units"];
      if (!u.is_array()) throw InputError(cp + ".units", "expected an array of booleans");
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (!u[k].is_boolean()) throw InputError(at(cp + ".units", k), "expected a boolean");
        chart.units.push_back(u[k].get<bool>());
      }
    }
    if (cj.contains("unit_chart")) {
      if (!cj["unit_chart"].is_boolean()) throw InputError(cp + ".unit_chart", "expected a boolean");
      chart.unit_chart = cj["unit_chart"].get<bool>();
    }
    s.charts.push_back(std::move(chart));
  }

  if (doc.contains("testforms")) {
    const json& tf = doc["testforms"];
    if (!tf.is_object()) throw InputError("testforms", "expected an object keyed by chart name");
    for (auto it = tf.begin(); it != tf.end(); ++it)
      s.testforms.emplace(it.key(), get_testform(it.value(), "testforms." + it.key()));
  }
  if (doc.contains("metadata")) {
    const json& md = doc["metadata"];
    if (!md.is_object()) throw InputError("metadata", "expected an object");
    for (auto it = md.begin(); it != md.end(); ++it) {
      if (!it.value().is_string()) throw InputError("metadata." + it.key(), "expected a string");
      s.metadata.emplace(it.key(), it.value().get<std::string>());
    }
  }
  s.validate();
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json doc;
  doc["signature"] = {{"n", s.signature.n}, {"p", s.signature.p}, {"q", s.signature.q}, {"N", s.signature.N}};
  json charts = json::array();
  for (const auto& c : s.charts) {
    json cj;
    cj["name"] = c.name;
    cj["alpha"] = c.alpha;
    cj["beta"] = c.beta;
    cj["jac"] = c.jac;
    cj["sign"] = c.sign;
    if (!c.units.empty()) {
      json u = json::array();
      for (bool b : c.units) u.push_back(b);
      cj["units"] = u;
    }
    if (c.unit_chart) cj["unit_chart"] = true;
    charts.push_back(cj);
  }
  doc["charts"] = charts;
  json tfs = json::object();
  for (const auto& [name, form] : s.testforms) {
    json terms = json::array();
    for (const auto& term : form.terms) {
      json factors = json::array();
      for (const auto& f : term.factors) factors.push_back({{"a", f.a}, {"b", f.b}, {"rho", profile_json(f.rho)}});
      json slots = json::array();
      for (int v : term.dbar_slots) slots.push_back(v + 1);
      terms.push_back({{"coeff", {{"re", rational_json(term.coeff.re)}, {"im", rational_json(term.coeff.im)}}},
                       {"factors", factors},
                       {"dbar_slots", slots}});
    }
    tfs[name] = {{"terms", terms}};
  }
  doc["testforms"] = tfs;
  if (!s.metadata.empty()) doc["metadata"] = s.metadata;
  return doc.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scenario load_scenario(const std::string& path_or_builtin) {
  if (path_or_builtin == "builtin:example3") return builtin_example3();
  if (path_or_builtin == "builtin:example3-base") return example3_base_scenario(example3_profiles({}));
  return parse_scenario(read_text_file(path_or_builtin));
}

PolyForm parse_polyform(std::string_view document) { return get_polyform(parse_document(document), "$"); }

std::string serialize_polyform(const PolyForm& form) { return polyform_json(form).dump(2); }

DivLemmaInput parse_divlemma(std::string_view document) {
  const json doc = parse_document(document);
  DivLemmaInput in;
  in.psi = get_polyform(require(doc, "psi", "$"), "psi");
  if (doc.contains("omega")) {
    in.omega = get_polyform(doc["omega"], "omega");
    if (in.omega->n() != in.psi.n() || in.omega->degree() != in.psi.degree())
      throw InputError("omega", "must have the same n and degree as psi");
  }
  const json& K = require(doc, "K", "$");
  if (!K.is_array()) throw InputError("K", "expected an array of indices");
  for (std::size_t k = 0; k < K.size(); ++k) {
    const long long v = get_int(K[k], at("K", k));
    if (v < 1 || v > in.psi.n()) throw InputError(at("K", k), "index out of range");
    in.K.insert(static_cast<int>(v - 1));
  }
  if (doc.contains("alphas")) {
    in.alphas = get_matrix(doc["alphas"], "alphas");
    for (std::size_t r = 0; r < in.alphas.size(); ++r)
      if (static_cast<int>(in.alphas[r].size()) != in.psi.n()) throw InputError(at("alphas", r), "wrong length");
  }
  return in;
}

}  // namespace rml
