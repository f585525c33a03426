#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mccg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grammatical case. Bare marks uncase-marked nouns (category N).
enum class Case { Nom, Acc, Gen, Dat, Abl, Loc, Bare };

const char* caseName(Case c);
std::optional<Case> caseFromName(std::string_view name);

// A case feature is either fixed or an unbound variable. Case variables
// let one entry share a case across atoms (the two S atoms of an adjunct
// S|{S} resolve to the same case), and an unbound variable unifies with
// anything, which is what makes a caseless S act as a wildcard.
struct CaseVar {
  int id = 0;
  friend bool operator==(CaseVar a, CaseVar b) { return a.id == b.id; }
};
using CaseTerm = std::variant<Case, CaseVar>;

bool sameCaseTerm(const CaseTerm& a, const CaseTerm& b);
std::string caseTermStr(const CaseTerm& c);

// First-order semantic term: variable, constant, or predicate-argument
// compound. Immutable; all operations build new terms.
class SemTerm {
 public:
  enum class Kind { Variable, Constant, Compound };

  SemTerm();  // empty constant; placeholder only
  static SemTerm variable(int id);
  static SemTerm constant(std::string name);
  static SemTerm compound(std::string functor, std::vector<SemTerm> args);

  Kind kind() const { return rep_->kind; }
  bool isVariable() const { return rep_->kind == Kind::Variable; }
  bool isConstant() const { return rep_->kind == Kind::Constant; }
  bool isCompound() const { return rep_->kind == Kind::Compound; }

  int varId() const;
  const std::string& name() const;  // constant name or compound functor
  const std::vector<SemTerm>& args() const;

  bool isGround() const;
  void variables(std::set<int>& out) const;
  // Constant leaves only; compound functors are not entities.
  void constants(std::set<std::string>& out) const;

  // The head content word: f for f(...), the term itself otherwise.
  SemTerm headConstant() const;

  std::string str() const;
  bool operator==(const SemTerm& o) const;
  bool operator!=(const SemTerm& o) const { return !(*this == o); }

 private:
  struct Rep {
    Kind kind;
    int var = 0;
    std::string name;
    std::vector<SemTerm> args;
  };
  explicit SemTerm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Idempotent substitution over semantic variables and case variables.
// apply() resolves binding chains fully, so apply(apply(t)) == apply(t).
class Substitution {
 public:
  bool empty() const { return sem_.empty() && case_.empty(); }
  std::size_t size() const { return sem_.size() + case_.size(); }

  SemTerm apply(const SemTerm& t) const;
  CaseTerm resolve(const CaseTerm& c) const;

  // Extend this substitution with the mgu of a and b. On failure the
  // partial extensions remain; callers that need rollback work on a copy.
  bool unifyTerms(const SemTerm& a, const SemTerm& b);
  bool unifyCases(const CaseTerm& a, const CaseTerm& b);

  std::string str() const;

 private:
  bool bindVar(int var, const SemTerm& t);
  std::map<int, SemTerm> sem_;
  std::map<int, CaseTerm> case_;
};

// Most general unifier of two terms, or nullopt. Inputs are expected to
// be standardized apart when they come from independent constituents.
std::optional<Substitution> unifySem(const SemTerm& a, const SemTerm& b);

// Fresh-id source shared by semantic and case variables; one per parse.
class VarPool {
 public:
  int fresh() { return next_++; }

 private:
  int next_ = 1;
};

// Consistent renaming; mapping accumulates so several terms of one
// constituent can be renamed together.
SemTerm renameVars(const SemTerm& t, std::map<int, int>& mapping, VarPool& pool);

// Term syntax: ident, or ident(term, ...). Identifiers starting with an
// ASCII uppercase letter followed only by digits (X, Y, P2) read as
// variables; anything else is a constant or functor.
SemTerm parseTerm(std::string_view text, std::map<std::string, int>& varNames,
                  VarPool& pool);

// Prefix form: parses one term starting at pos and advances pos past it.
SemTerm parseTermPrefix(std::string_view text, std::size_t& pos,
                        std::map<std::string, int>& varNames, VarPool& pool);

bool isVariableName(std::string_view name);

// Same grammar, but variables are rejected.
SemTerm parseGroundTerm(std::string_view text);

// Split on a separator at paren depth zero; trims whitespace.
std::vector<std::string> splitTopLevel(std::string_view text, char sep);

}  // namespace mccg
