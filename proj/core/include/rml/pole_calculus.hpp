#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace rml {

using IndexSet = std::set<int>;      // 0-based lambda indices
using SupportFamily = std::set<IndexSet>;

/// gamma(l_S; l_P): the indices in S sit under dbar, the rest P are
/// principal-value factors.
struct GammaSymbol {
  IndexSet dbar;
  IndexSet pv;
  friend auto operator<=>(const GammaSymbol&, const GammaSymbol&) = default;
  friend bool operator==(const GammaSymbol&, const GammaSymbol&) = default;
};

std::string to_string(const GammaSymbol& g);  // 1-based, e.g. "g(1,2;3)"
std::string to_string(const IndexSet& s);      // "{1,2}"
std::string to_string(const SupportFamily& f); // "{{1,2},{3}}"; "{}" when analytic

enum class Provenance { Proposition, Intersection };

/// Every pole hyperplane has support inside some member; empty = analytic.
struct PoleConstraint {
  SupportFamily supports;
  Provenance source = Provenance::Proposition;
  bool analytic() const { return supports.empty(); }
};

/// Drops empty sets and non-maximal members.
SupportFamily antichain(const SupportFamily& family);

/// Poles live in the dbar block and need two nonzero coefficients.
PoleConstraint prop_constraint(const GammaSymbol& sym);

/// The symbols obtained by moving one principal-value index under dbar,
/// in ascending order of the moved index.  Throws EmptyPV.
std::vector<GammaSymbol> equality_terms(const GammaSymbol& base);

/// New constraint for `target`, one of the terms of the equality generated
/// by a base whose dbar-image is analytic: poles must lie in the prior
/// family and in the union of the other terms' families.  Throws
/// IncompleteContext when a sibling has no known constraint.
PoleConstraint combine(const GammaSymbol& target, const std::vector<GammaSymbol>& equality,
                       const std::map<GammaSymbol, PoleConstraint>& known);

struct TraceStep {
  enum class Kind { Initial, Lemma, Equality } kind = Kind::Initial;
  GammaSymbol target;
  GammaSymbol base;                   // Equality: dbar of this symbol is analytic
  std::vector<GammaSymbol> siblings;  // Equality: other terms of the identity
  SupportFamily prior;
  SupportFamily context;
  SupportFamily result;
};

struct ProofTrace {
  GammaSymbol goal;
  bool analytic = false;
  SupportFamily residual;
  std::vector<TraceStep> steps;
};

/// Proves gamma(l_1..l_p; l_{p+1}..l_{p+q}) analytic near the origin.
ProofTrace deduce(int p, int q);
ProofTrace deduce_symbol(const GammaSymbol& goal);

}  // namespace rml
