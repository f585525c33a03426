#include "mccg/category.hpp"

#include <algorithm>
#include <tuple>

namespace mccg {

const char* directionMark(Direction d) {
  switch (d) {
    case Direction::Left: return "<";
    case Direction::Right: return ">";
    case Direction::Any: return "";
  }
  return "";
}

struct Category::Rep {
  bool atomic = true;
  CatKind kind = CatKind::S;
  CaseTerm caseTerm = CaseVar{0};
  std::shared_ptr<const Category> result;
  std::vector<ArgSlot> args;
};

Category::Category(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

Category::Category() : Category(atomic(CatKind::S, CaseVar{0})) {}

Category Category::atomic(CatKind kind, CaseTerm caseTerm) {
  auto rep = std::make_shared<Rep>();
  rep->atomic = true;
  rep->kind = kind;
  rep->caseTerm = caseTerm;
  return Category(std::move(rep));
}

Category Category::function(Category result, std::vector<ArgSlot> args) {
  auto rep = std::make_shared<Rep>();
  rep->atomic = false;
  rep->result = std::make_shared<const Category>(std::move(result));
  rep->args = std::move(args);
  return Category(std::move(rep));
}

bool Category::isAtomic() const { return rep_->atomic; }

CatKind Category::kind() const {
  if (!isAtomic()) throw Error("kind() on function category");
  return rep_->kind;
}

const CaseTerm& Category::caseTerm() const {
  if (!isAtomic()) throw Error("caseTerm() on function category");
  return rep_->caseTerm;
}

const Category& Category::result() const {
  if (isAtomic()) throw Error("result() on atomic category");
  return *rep_->result;
}

const std::vector<ArgSlot>& Category::args() const {
  static const std::vector<ArgSlot> none;
  return isAtomic() ? none : rep_->args;
}

CatKind Category::headKind() const {
  const Category* c = this;
  while (!c->isAtomic()) c = &c->result();
  return c->kind();
}

namespace {

std::string atomStr(CatKind kind, const CaseTerm& ct) {
  if (kind == CatKind::N) return "N";
  if (kind == CatKind::NP) {
    if (std::holds_alternative<Case>(ct)) {
      switch (std::get<Case>(ct)) {
        case Case::Nom: return "Nn";
        case Case::Acc: return "Na";
        case Case::Gen: return "Ng";
        case Case::Dat: return "Nd";
        case Case::Abl: return "Nabl";
        case Case::Loc: return "Nl";
        case Case::Bare: return "N";
      }
    }
    return "NP";
  }
  // S
  if (std::holds_alternative<Case>(ct))
    return std::string("S[") + caseName(std::get<Case>(ct)) + "]";
  return "S";
}

std::string categoryStr(const Category& c, bool parenFunctions) {
  if (c.isAtomic()) return atomStr(c.kind(), c.caseTerm());
  std::string inner = categoryStr(c.result(), true) + " | {";
  const auto& args = c.args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) inner += ", ";
    inner += directionMark(args[i].direction);
    inner += categoryStr(args[i].category, true);
    inner += ":";
    inner += args[i].semVar.str();
  }
  inner += "}";
  if (parenFunctions) return "(" + inner + ")";
  return inner;
}

}  // namespace

std::string Category::str() const { return categoryStr(*this, false); }

Category applySubst(const Category& c, const Substitution& s) {
  if (c.isAtomic()) return Category::atomic(c.kind(), s.resolve(c.caseTerm()));
  std::vector<ArgSlot> args;
  args.reserve(c.args().size());
  for (const auto& a : c.args()) {
    args.push_back({applySubst(a.category, s), a.direction, s.apply(a.semVar)});
  }
  return Category::function(applySubst(c.result(), s), std::move(args));
}

Category renameCategoryVars(const Category& c, std::map<int, int>& semMap,
                            std::map<int, int>& caseMap, VarPool& pool) {
  if (c.isAtomic()) {
    CaseTerm ct = c.caseTerm();
    if (std::holds_alternative<CaseVar>(ct)) {
      int id = std::get<CaseVar>(ct).id;
      auto [it, inserted] = caseMap.try_emplace(id, 0);
      if (inserted) it->second = pool.fresh();
      ct = CaseVar{it->second};
    }
    return Category::atomic(c.kind(), ct);
  }
  std::vector<ArgSlot> args;
  args.reserve(c.args().size());
  for (const auto& a : c.args()) {
    args.push_back({renameCategoryVars(a.category, semMap, caseMap, pool),
                    a.direction, renameVars(a.semVar, semMap, pool)});
  }
  return Category::function(renameCategoryVars(c.result(), semMap, caseMap, pool),
                            std::move(args));
}

namespace {

bool matchArgSets(const std::vector<ArgSlot>& as, std::size_t i,
                  const std::vector<ArgSlot>& bs, std::vector<bool>& used,
                  Substitution& s) {
  if (i == as.size()) return true;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (used[j]) continue;
    if (as[i].direction != bs[j].direction) continue;
    Substitution trial = s;
    if (!unifyCat(as[i].category, bs[j].category, trial)) continue;
    if (!trial.unifyTerms(as[i].semVar, bs[j].semVar)) continue;
    used[j] = true;
    Substitution saved = s;
    s = trial;
    if (matchArgSets(as, i + 1, bs, used, s)) return true;
    s = saved;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool unifyCat(const Category& a, const Category& b, Substitution& s) {
  if (a.isAtomic() != b.isAtomic()) return false;
  if (a.isAtomic()) {
    if (a.kind() != b.kind()) return false;
    return s.unifyCases(a.caseTerm(), b.caseTerm());
  }
  if (a.args().size() != b.args().size()) return false;
  if (!unifyCat(a.result(), b.result(), s)) return false;
  std::vector<bool> used(b.args().size(), false);
  return matchArgSets(a.args(), 0, b.args(), used, s);
}

std::string structuralStr(const Category& c) {
  if (c.isAtomic()) {
    const CaseTerm& ct = c.caseTerm();
    if (std::holds_alternative<CaseVar>(ct))
      return atomStr(c.kind(), ct) + "[?]";
    return atomStr(c.kind(), ct);
  }
  std::string s = "(" + structuralStr(c.result()) + "|{";
  for (const auto& a : c.args()) {
    s += directionMark(a.direction);
    s += structuralStr(a.category);
    s += ";";
  }
  return s + "})";
}

namespace {

int firstOccurrence(const SemTerm& var, const SemTerm& sem, int& counter) {
  switch (sem.kind()) {
    case SemTerm::Kind::Variable: {
      int at = counter++;
      if (var.isVariable() && sem.varId() == var.varId()) return at;
      return -1;
    }
    case SemTerm::Kind::Constant:
      ++counter;
      return -1;
    case SemTerm::Kind::Compound: {
      ++counter;
      for (const auto& a : sem.args()) {
        int r = firstOccurrence(var, a, counter);
        if (r >= 0) return r;
      }
      return -1;
    }
  }
  return -1;
}

int occurrenceIndex(const SemTerm& var, const SemTerm& sem) {
  int counter = 0;
  int r = firstOccurrence(var, sem, counter);
  return r < 0 ? counter + 1 : r;
}

}  // namespace

Category normalize(const Category& c, const SemTerm& semContext) {
  if (c.isAtomic()) return c;
  std::vector<ArgSlot> args;
  args.reserve(c.args().size());
  for (const auto& a : c.args()) {
    args.push_back({normalize(a.category, semContext), a.direction, a.semVar});
  }
  std::stable_sort(args.begin(), args.end(),
                   [&](const ArgSlot& x, const ArgSlot& y) {
                     auto kx = std::make_tuple(structuralStr(x.category),
                                               static_cast<int>(x.direction),
                                               occurrenceIndex(x.semVar, semContext));
                     auto ky = std::make_tuple(structuralStr(y.category),
                                               static_cast<int>(y.direction),
                                               occurrenceIndex(y.semVar, semContext));
                     return kx < ky;
                   });
  return Category::function(normalize(c.result(), semContext), std::move(args));
}

}  // namespace mccg
