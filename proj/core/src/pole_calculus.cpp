#include "rml/pole_calculus.hpp"

#include <algorithm>

#include "rml/error.hpp"

namespace rml {

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string to_string(const SupportFamily& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : f) {
    out += (first ? "" : ",") + to_string(s);
    first = false;
  }
  return out + "}";
}

std::string to_string(const GammaSymbol& g) {
  auto list = [](const IndexSet& s) {
    std::string out;
    for (int i : s) out += (out.empty() ? "" : ",") + std::to_string(i + 1);
    return out;
  };
  return "g(" + list(g.dbar) + ";" + list(g.pv) + ")";
}

SupportFamily antichain(const SupportFamily& family) {
  SupportFamily out;
  for (const auto& s : family) {
    if (s.empty()) continue;
    bool dominated = false;
    for (const auto& t : family) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.insert(s);
  }
  return out;
}

PoleConstraint prop_constraint(const GammaSymbol& sym) {
  PoleConstraint c;
  c.source = Provenance::Proposition;
  if (sym.dbar.size() >= 2) c.supports.insert(sym.dbar);
  return c;
}

std::vector<GammaSymbol> equality_terms(const GammaSymbol& base) {
  if (base.pv.empty()) throw Error("EmptyPV", "equality needs a principal-value index to move: " + to_string(base));
  std::vector<GammaSymbol> out;
  for (int j : base.pv) {
    GammaSymbol g = base;
    g.pv.erase(j);
    g.dbar.insert(j);
    out.push_back(std::move(g));
  }
  return out;
}

PoleConstraint combine(const GammaSymbol& target, const std::vector<GammaSymbol>& equality,
                       const std::map<GammaSymbol, PoleConstraint>& known) {
  auto prior_it = known.find(target);
  const PoleConstraint prior = prior_it != known.end() ? prior_it->second : prop_constraint(target);
  SupportFamily context;
  for (const auto& g : equality) {
    if (g == target) continue;
    auto it = known.find(g);
    if (it == known.end()) throw Error("IncompleteContext", "no constraint known for " + to_string(g));
    context.insert(it->second.supports.begin(), it->second.supports.end());
  }
  SupportFamily meet;
  for (const auto& a : prior.supports) {
    for (const auto& b : context) {
      IndexSet s;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(s, s.end()));
      meet.insert(std::move(s));
    }
  }
  return {antichain(meet), Provenance::Intersection};
}

namespace {

class Deducer {
 public:
  ProofTrace run(const GammaSymbol& goal) {
    ProofTrace trace;
    trace.goal = goal;
    trace.analytic = prove(goal);
    trace.residual = known_.at(goal).supports;
    trace.steps = std::move(steps_);
    return trace;
  }

 private:
  const PoleConstraint& constraint_of(const GammaSymbol& g) {
    auto it = known_.find(g);
    if (it == known_.end()) it = known_.emplace(g, prop_constraint(g)).first;
    return it->second;
  }

  bool prove(const GammaSymbol& goal) {
    if (auto it = proven_.find(goal); it != proven_.end()) return it->second;
    const PoleConstraint& start = constraint_of(goal);
    steps_.push_back({TraceStep::Kind::Initial, goal, {}, {}, {}, {}, start.supports});
    if (start.analytic()) return proven_[goal] = true;

    // Bases goal \ {i}, lexicographically ascending, i.e. i descending.
    std::vector<int> order(goal.dbar.begin(), goal.dbar.end());
    std::reverse(order.begin(), order.end());
    for (int i : order) {
      GammaSymbol base = goal;
      base.dbar.erase(i);
      base.pv.insert(i);
      if (!base.dbar.empty() && !prove(base)) continue;
      if (!base.dbar.empty())
        steps_.push_back({TraceStep::Kind::Lemma, base, {}, {}, {}, {}, {}});

      const std::vector<GammaSymbol> terms = equality_terms(base);
      std::vector<GammaSymbol> siblings;
      SupportFamily context;
      for (const auto& g : terms) {
        if (g == goal) continue;
        siblings.push_back(g);
        const auto& c = constraint_of(g);
        context.insert(c.supports.begin(), c.supports.end());
      }
      const SupportFamily prior = known_.at(goal).supports;
      PoleConstraint next = combine(goal, terms, known_);
      known_[goal] = next;
      steps_.push_back({TraceStep::Kind::Equality, goal, base, siblings, prior, context, next.supports});
      if (next.analytic()) return proven_[goal] = true;
    }
    return proven_[goal] = false;
  }

  std::map<GammaSymbol, PoleConstraint> known_;
  std::map<GammaSymbol, bool> proven_;
  std::vector<TraceStep> steps_;
};

}  // namespace

ProofTrace deduce_symbol(const GammaSymbol& goal) {
  if (goal.dbar.empty()) throw Error("EmptyDbar", "residue symbols need at least one dbar index");
  for (int i : goal.dbar)
    if (goal.pv.count(i)) throw Error("OverlappingSymbol", "index " + std::to_string(i + 1) + " is both dbar and pv");
  return Deducer().run(goal);
}

ProofTrace deduce(int p, int q) {
  if (p < 1) throw Error("BadSignature", "deduce needs p >= 1");
  if (q < 0) throw Error("BadSignature", "deduce needs q >= 0");
  GammaSymbol goal;
  for (int i = 0; i < p; ++i) goal.dbar.insert(i);
  for (int j = p; j < p + q; ++j) goal.pv.insert(j);
  return deduce_symbol(goal);
}

}  // namespace rml
