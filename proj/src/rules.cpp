#include "mccg/rules.hpp"

namespace mccg {

namespace {

bool directionAllows(Direction d, bool forward) {
  if (d == Direction::Any) return true;
  return forward ? d == Direction::Right : d == Direction::Left;
}

Category removeSlot(const Category& fn, std::size_t idx) {
  std::vector<ArgSlot> rest;
  rest.reserve(fn.args().size() - 1);
  for (std::size_t i = 0; i < fn.args().size(); ++i) {
    if (i != idx) rest.push_back(fn.args()[i]);
  }
  return Category::function(fn.result(), std::move(rest));
}

std::vector<SynSemConstituent> apply(const SynSemConstituent& fn,
                                     const SynSemConstituent& arg,
                                     bool forward) {
  std::vector<SynSemConstituent> out;
  if (fn.category.isAtomic() || arg.category.isFunction()) return out;
  const auto& slots = fn.category.args();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!directionAllows(slots[i].direction, forward)) continue;
    Substitution s;
    if (!unifyCat(slots[i].category, arg.category, s)) continue;
    if (!s.unifyTerms(slots[i].semVar, arg.sem)) continue;
    out.push_back({applySubst(removeSlot(fn.category, i), s), s.apply(fn.sem)});
  }
  return out;
}

ComposeResult compose(const SynSemConstituent& x, const SynSemConstituent& y,
                      bool forward, const RuleConfig& cfg) {
  ComposeResult out;
  if (x.category.isAtomic() || y.category.isAtomic()) return out;
  const auto& slots = x.category.args();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!directionAllows(slots[i].direction, forward)) continue;
    Substitution s;
    if (!unifyCat(slots[i].category, y.category.result(), s)) continue;
    if (!s.unifyTerms(slots[i].semVar, y.sem)) continue;
    // Restriction (8c): Y != NP. The shared category must not be a simple
    // nominal, which keeps NPs continuous and head-final.
    if (cfg.blockNounComposition && slots[i].category.isAtomic() &&
        (slots[i].category.kind() == CatKind::NP ||
         slots[i].category.kind() == CatKind::N)) {
      out.restrictionBlocked = true;
      continue;
    }
    std::vector<ArgSlot> merged;
    merged.reserve(slots.size() - 1 + y.category.args().size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (k != i) merged.push_back(slots[k]);
    }
    for (const auto& a : y.category.args()) merged.push_back(a);
    Category cat = Category::function(x.category.result(), std::move(merged));
    out.results.push_back({applySubst(cat, s), s.apply(x.sem)});
  }
  return out;
}

}  // namespace

std::vector<SynSemConstituent> forwardApply(const SynSemConstituent& fn,
                                            const SynSemConstituent& arg) {
  return apply(fn, arg, true);
}

std::vector<SynSemConstituent> backwardApply(const SynSemConstituent& arg,
                                             const SynSemConstituent& fn) {
  return apply(fn, arg, false);
}

SynSemConstituent cleanup(const SynSemConstituent& c) {
  Category cat = c.category;
  while (cat.isFunction() && cat.args().empty()) cat = cat.result();
  return {cat, c.sem};
}

SynSemConstituent standardizeApart(const SynSemConstituent& c, VarPool& pool) {
  std::map<int, int> semMap;
  std::map<int, int> caseMap;
  return {renameCategoryVars(c.category, semMap, caseMap, pool),
          renameVars(c.sem, semMap, pool)};
}

ComposeResult forwardCompose(const SynSemConstituent& x,
                             const SynSemConstituent& y,
                             const RuleConfig& cfg) {
  return compose(x, y, true, cfg);
}

ComposeResult backwardCompose(const SynSemConstituent& y,
                              const SynSemConstituent& x,
                              const RuleConfig& cfg) {
  return compose(x, y, false, cfg);
}

namespace {

// Canonical renumbering shared by the category walk and the term walk.
struct Renumber {
  std::map<int, int> sem;
  std::map<int, int> cases;
  int next = 1;

  int semId(int v) {
    auto [it, inserted] = sem.try_emplace(v, 0);
    if (inserted) it->second = next++;
    return it->second;
  }
  int caseId(int v) {
    auto [it, inserted] = cases.try_emplace(v, 0);
    if (inserted) it->second = next++;
    return it->second;
  }
};

void writeTerm(const SemTerm& t, Renumber& rn, std::string& out) {
  switch (t.kind()) {
    case SemTerm::Kind::Variable:
      out += "_" + std::to_string(rn.semId(t.varId()));
      break;
    case SemTerm::Kind::Constant:
      out += t.name();
      break;
    case SemTerm::Kind::Compound: {
      out += t.name();
      out += "(";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ",";
        writeTerm(t.args()[i], rn, out);
      }
      out += ")";
      break;
    }
  }
}

void writeCategory(const Category& c, Renumber& rn, std::string& out) {
  if (c.isAtomic()) {
    out += std::to_string(static_cast<int>(c.kind()));
    const CaseTerm& ct = c.caseTerm();
    if (std::holds_alternative<Case>(ct)) {
      out += caseName(std::get<Case>(ct));
    } else {
      out += "?" + std::to_string(rn.caseId(std::get<CaseVar>(ct).id));
    }
    return;
  }
  out += "(";
  writeCategory(c.result(), rn, out);
  out += "|";
  for (const auto& a : c.args()) {
    out += directionMark(a.direction);
    writeCategory(a.category, rn, out);
    out += ":";
    writeTerm(a.semVar, rn, out);
    out += ";";
  }
  out += ")";
}

}  // namespace

std::string canonicalKey(const SynSemConstituent& c) {
  Category norm = normalize(c.category, c.sem);
  Renumber rn;
  std::string out;
  writeCategory(norm, rn, out);
  out += " : ";
  writeTerm(c.sem, rn, out);
  return out;
}

}  // namespace mccg
