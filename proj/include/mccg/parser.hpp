#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mccg/lexicon.hpp"
#include "mccg/ordering.hpp"

namespace mccg {

struct TokenUnknownError : Error {
  using Error::Error;
};

struct ChartLimitError : Error {
  using Error::Error;
};

// A chart constituent: the syntactic/semantic side paired with its
// ordering category. Both sides must combine for two constituents to
// combine.
struct Constituent {
  SynSemConstituent synsem;
  OrderingCategory ordering;
};

std::string constituentKey(const Constituent& c);

struct DerivationNode {
  std::string rule;
  int start = 0;
  int end = 0;
  std::string show;
  std::vector<std::shared_ptr<const DerivationNode>> children;

  std::string str(int indent = 0) const;
  bool containsRule(const std::string& name) const;
};

struct ParseResult {
  SemTerm as;
  std::optional<ISNode> is;  // absent only when ordering checks are disabled
  std::shared_ptr<const DerivationNode> trace;
};

struct ParseOptions {
  // Test hook: with ordering disabled the chart runs on the syntactic
  // component alone and results carry no IS.
  bool orderingEnabled = true;
  std::size_t maxChartItems = 100000;
  RuleConfig rules;
};

struct ParseStats {
  std::size_t chartItems = 0;
  std::size_t givennessViolations = 0;
  std::size_t incompleteArguments = 0;
  std::size_t restrictionBlocks = 0;
  std::size_t givenClashes = 0;
};

struct Combined {
  Constituent constituent;
  std::string synRule;
  std::string ordRule;
};

// All ways the adjacent pair (left, right) combines: a syntactic rule must
// succeed and, unless disabled, an ordering rule must succeed as well. The
// ordering rule is chosen independently of the syntactic rule, except that
// verb composition (both ordering sides still templates) completes the
// subordinate IS and embeds it into the matrix template's ground.
std::vector<Combined> combine(const Constituent& left, const Constituent& right,
                              const DiscourseModel& dm,
                              const ParseOptions& opts = {},
                              ParseStats* stats = nullptr);

// Closure of a set of constituents under the clean-up rewrite and the
// ordering skip rule; deduplicated.
std::vector<Constituent> unaryClosure(const std::vector<Constituent>& items);

// Fresh-variable instantiation of one ordering variant of an entry.
Constituent lexicalConstituent(const LexEntry& entry, std::size_t variant,
                               VarPool& pool);

// CKY chart over the token sequence. Accepts items spanning the whole
// input whose category is plain S and whose ordering side completes to an
// IS. Results are deduplicated by (AS, IS) and sorted.
std::vector<ParseResult> parse(const std::vector<std::string>& tokens,
                               const Lexicon& lexicon, const DiscourseModel& dm,
                               const ParseOptions& opts = {},
                               ParseStats* stats = nullptr);

std::vector<std::string> tokenize(const std::string& sentence);

}  // namespace mccg
