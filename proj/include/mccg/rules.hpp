#pragma once

#include <string>
#include <vector>

#include "mccg/category.hpp"

namespace mccg {

// A syntactic category paired with its propositional interpretation.
struct SynSemConstituent {
  Category category;
  SemTerm sem;

  bool isNounClass() const { return category.isNounClass(); }
  std::string str() const { return category.str() + " : " + sem.str(); }
};

struct RuleConfig {
  // Rule (8c): composition is blocked when the shared category is a simple
  // nominal. Switchable because freer languages want it off.
  bool blockNounComposition = true;
};

// Forward Application (>): a slot with direction Right/Any whose category
// unifies with the argument is removed and the argument's interpretation
// is bound in. One result per matching slot.
std::vector<SynSemConstituent> forwardApply(const SynSemConstituent& fn,
                                            const SynSemConstituent& arg);

// Backward Application (<): mirror; the function is to the right.
std::vector<SynSemConstituent> backwardApply(const SynSemConstituent& arg,
                                             const SynSemConstituent& fn);

// X|{} rewrites to X, repeated to fixpoint.
SynSemConstituent cleanup(const SynSemConstituent& c);

// Alpha-equivalent copy with fresh variables drawn from the pool.
// Constituents from independent sources must be standardized apart before
// they meet in a rule.
SynSemConstituent standardizeApart(const SynSemConstituent& c, VarPool& pool);

struct ComposeResult {
  std::vector<SynSemConstituent> results;
  // True when at least one slot matched but was rejected only by the
  // noun-composition restriction.
  bool restrictionBlocked = false;
};

// Forward Composition (>B): a Right/Any slot of x unifies with y's result;
// the remaining argument multisets collapse into one and y's interpretation
// nests inside x's at the slot variable.
ComposeResult forwardCompose(const SynSemConstituent& x,
                             const SynSemConstituent& y,
                             const RuleConfig& cfg = {});

// Backward Composition (<B): mirror; x is to the right of y.
ComposeResult backwardCompose(const SynSemConstituent& y,
                              const SynSemConstituent& x,
                              const RuleConfig& cfg = {});

// Alpha-invariant canonical form: normalized slot order, variables
// renumbered by traversal. Equal keys mean the same constituent.
std::string canonicalKey(const SynSemConstituent& c);

inline bool equivalent(const SynSemConstituent& a, const SynSemConstituent& b) {
  return canonicalKey(a) == canonicalKey(b);
}

}  // namespace mccg
