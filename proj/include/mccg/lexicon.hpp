#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mccg/ordering.hpp"
#include "mccg/rules.hpp"

namespace mccg {

struct LoadError : Error {
  LoadError(const std::string& origin, int line, const std::string& msg)
      : Error(origin + ":" + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

struct ArityMismatchError : Error {
  using Error::Error;
};

enum class OrderingSpec { Template9, Value };

// One lexical entry. Verbs written with `template9` carry two ordering
// variants: the full IS template and the inferrable-topic variant.
struct LexEntry {
  std::string form;
  SynSemConstituent synsem;
  OrderingSpec orderingSpec = OrderingSpec::Value;
  bool inherentGiven = false;
  std::vector<OrderingCategory> orderingVariants;
};

// Build a validated, ordering-expanded entry from a synsem expression,
// e.g. makeLexEntry("gördü", "S: see(X,Y) | {Nn:X, Na:Y}", Template9).
LexEntry makeLexEntry(const std::string& form, const std::string& synsemText,
                      OrderingSpec spec, bool inherentGiven = false);

SynSemConstituent parseSynSem(const std::string& text);

class Lexicon {
 public:
  static Lexicon fromFile(const std::string& path);
  static Lexicon fromString(const std::string& text,
                            const std::string& origin = "<string>");

  void add(LexEntry entry);
  // Entries for a surface form, in file order; empty if unknown.
  std::vector<const LexEntry*> lookup(const std::string& form) const;
  const std::vector<LexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  std::string serialize() const;

 private:
  std::vector<LexEntry> entries_;
  std::map<std::string, std::vector<std::size_t>> byForm_;
  void reindex();
};

// Category schemas for the recurring entry shapes.
enum class SchemaKind {
  Intransitive,
  Transitive,
  Ditransitive,
  GerundVerb,
  SententialAdjunct,
  Adjective,
  Noun,
  IslandClauseHead,
  NonIslandClauseHead,
};

// Instantiate a schema with fresh variables. `cases` supplies the NP
// argument cases in semantic-argument order; gerunds additionally take the
// case their clausal result bears. Throws ArityMismatchError when the case
// list does not fit the schema.
LexEntry instantiate(SchemaKind kind, const std::string& form,
                     const std::string& predicate,
                     const std::vector<Case>& cases = {},
                     std::optional<Case> resultCase = std::nullopt,
                     bool inherentGiven = false);

}  // namespace mccg
