#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mccg/term.hpp"

namespace mccg {

enum class CatKind { S, NP, N };

// Direction feature on an argument slot. Right slots are consumed only by
// forward rules, Left only by backward rules, Any by either.
enum class Direction { Left, Right, Any };

const char* directionMark(Direction d);  // ">", "<", ""

struct ArgSlot;

// Atomic case-marked category, or a function over a multiset of argument
// slots. Immutable and cheap to copy.
class Category {
 public:
  Category();  // placeholder atomic S
  static Category atomic(CatKind kind, CaseTerm caseTerm);
  static Category function(Category result, std::vector<ArgSlot> args);

  bool isAtomic() const;
  bool isFunction() const { return !isAtomic(); }
  CatKind kind() const;
  const CaseTerm& caseTerm() const;
  const Category& result() const;
  const std::vector<ArgSlot>& args() const;

  // Kind of the innermost result.
  CatKind headKind() const;
  bool isNounClass() const {
    return headKind() == CatKind::NP || headKind() == CatKind::N;
  }

  std::string str() const;

 private:
  struct Rep;
  explicit Category(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;
};

// One member of a function category's argument multiset. semVar is the
// variable the filler's interpretation binds to in the owner's semantics.
struct ArgSlot {
  Category category;
  Direction direction = Direction::Any;
  SemTerm semVar;
};

Category applySubst(const Category& c, const Substitution& s);

// Consistent fresh renaming of semantic and case variables.
Category renameCategoryVars(const Category& c, std::map<int, int>& semMap,
                            std::map<int, int>& caseMap, VarPool& pool);

// Recursive unification. Atomics match on kind plus case (unbound case is
// a wildcard); functions match results and a bijection between argument
// multisets (directions must agree). Extends s; callers copy to roll back.
bool unifyCat(const Category& a, const Category& b, Substitution& s);

// Category with argument multisets put into canonical order, so equality
// is insensitive to slot permutation. semContext breaks ties between
// structurally identical slots by first occurrence of their variable.
Category normalize(const Category& c, const SemTerm& semContext);

// Structure with variables anonymized; sort key for slots.
std::string structuralStr(const Category& c);

}  // namespace mccg
