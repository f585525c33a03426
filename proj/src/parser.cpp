#include "mccg/parser.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace mccg {

namespace {

bool isFn(const OrderingCategory& ord) {
  return std::holds_alternative<OrderingFunction>(ord);
}

SemTerm denotationOf(const SynSemConstituent& ss) {
  return ss.isNounClass() ? ss.sem : ss.sem.headConstant();
}

std::string orderingKey(const Constituent& c) {
  if (!isFn(c.ordering)) {
    const auto& v = std::get<OrderingValue>(c.ordering);
    std::string den =
        v.denotation == c.synsem.sem ? "<sem>" : v.denotation.str();
    return "V:" + den + "/" + std::to_string(static_cast<int>(v.given));
  }
  const auto& f = std::get<OrderingFunction>(c.ordering);
  std::string s = "F:";
  s += f.topic ? f.topic->inlineStr() : "_";
  s += "|";
  s += f.focus ? f.focus->inlineStr() : "_";
  s += "|[";
  for (const auto& g : f.ground) s += g.inlineStr() + ",";
  s += "]|";
  for (const auto& slot : f.pending) {
    s += std::to_string(static_cast<int>(slot.role));
    s += slot.direction == Direction::Right ? ">" : "<";
    s += slot.optional ? "o" : "";
    s += slot.repeatable ? "r" : "";
    s += slot.requiresGiven ? "g" : "";
    s += ";";
  }
  s += f.verbFocusFallback ? "*" : "";
  return s;
}

// The ordering-rule argument view of a constituent: a value fills as its
// denotation; a template must first complete to an embedded IS.
std::optional<OrdArg> makeOrdArg(const Constituent& c, ParseStats* stats) {
  if (!isFn(c.ordering)) {
    const auto& v = std::get<OrderingValue>(c.ordering);
    return OrdArg{ISValue::sem(v.denotation), v.given, v.denotation};
  }
  auto node = complete(std::get<OrderingFunction>(c.ordering));
  if (!node) {
    if (stats) ++stats->incompleteArguments;
    return std::nullopt;
  }
  return OrdArg{ISValue::nested(*node), Givenness::Unknown, c.synsem.sem};
}

void note(ParseStats* stats, OrdFailure f) {
  if (!stats) return;
  if (f == OrdFailure::GivennessViolation) ++stats->givennessViolations;
  if (f == OrdFailure::GivenClash) ++stats->givenClashes;
}

}  // namespace

std::string constituentKey(const Constituent& c) {
  return canonicalKey(c.synsem) + " // " + orderingKey(c);
}

std::string DerivationNode::str(int indent) const {
  std::ostringstream os;
  os << std::string(indent, ' ') << "[" << start << "," << end << "] " << show
     << "   <" << rule << ">\n";
  for (const auto& ch : children) os << ch->str(indent + 2);
  return os.str();
}

bool DerivationNode::containsRule(const std::string& name) const {
  if (rule.find(name) != std::string::npos) return true;
  for (const auto& ch : children) {
    if (ch->containsRule(name)) return true;
  }
  return false;
}

std::vector<Combined> combine(const Constituent& left, const Constituent& right,
                              const DiscourseModel& dm,
                              const ParseOptions& opts, ParseStats* stats) {
  struct SynCand {
    SynSemConstituent ss;
    const char* rule;
    bool compose;
    bool primaryLeft;
  };
  std::vector<SynCand> cands;
  for (auto& r : forwardApply(left.synsem, right.synsem))
    cands.push_back({std::move(r), "fwdApply", false, true});
  for (auto& r : backwardApply(left.synsem, right.synsem))
    cands.push_back({std::move(r), "bwdApply", false, false});
  auto fc = forwardCompose(left.synsem, right.synsem, opts.rules);
  if (fc.restrictionBlocked && stats) ++stats->restrictionBlocks;
  for (auto& r : fc.results)
    cands.push_back({std::move(r), "fwdCompose", true, true});
  auto bc = backwardCompose(left.synsem, right.synsem, opts.rules);
  if (bc.restrictionBlocked && stats) ++stats->restrictionBlocks;
  for (auto& r : bc.results)
    cands.push_back({std::move(r), "bwdCompose", true, false});

  std::vector<Combined> out;
  for (const auto& cand : cands) {
    SynSemConstituent cleaned = cleanup(cand.ss);
    if (!opts.orderingEnabled) {
      out.push_back({{cleaned, OrderingValue{denotationOf(cleaned)}},
                     cand.rule, "-"});
      continue;
    }
    // Verb composition: both sides still carry IS templates. The
    // subordinate side (whose result was consumed) must have completed its
    // IS, which is then embedded into the matrix template.
    if (cand.compose && isFn(left.ordering) && isFn(right.ordering)) {
      const auto& matrix = std::get<OrderingFunction>(
          cand.primaryLeft ? left.ordering : right.ordering);
      const auto& sub = std::get<OrderingFunction>(
          cand.primaryLeft ? right.ordering : left.ordering);
      auto subIS = complete(sub);
      if (!subIS) {
        if (stats) ++stats->incompleteArguments;
        continue;
      }
      OrderingFunction merged = matrix;
      merged.ground.push_back(ISValue::nested(*subIS));
      out.push_back({{cleaned, std::move(merged)}, cand.rule, "ordEmbed"});
      continue;
    }
    if (isFn(left.ordering)) {
      if (auto arg = makeOrdArg(right, stats)) {
        const auto& fn = std::get<OrderingFunction>(left.ordering);
        auto r = ordForwardApply(fn, *arg, dm);
        note(stats, r.failure);
        if (r.result) {
          std::string label =
              "ordFwd[" + std::string(roleName(fn.pending.front().role)) + "]";
          out.push_back({{cleaned, std::move(*r.result)}, cand.rule, label});
        }
      }
    }
    if (isFn(right.ordering)) {
      if (auto arg = makeOrdArg(left, stats)) {
        const auto& fn = std::get<OrderingFunction>(right.ordering);
        auto r = ordBackwardApply(*arg, fn, dm);
        note(stats, r.failure);
        if (r.result) {
          std::string label =
              "ordBwd[" + std::string(roleName(fn.pending.front().role)) + "]";
          out.push_back({{cleaned, std::move(*r.result)}, cand.rule, label});
        }
      }
    }
    if (!isFn(left.ordering) && !isFn(right.ordering)) {
      auto r = ordIdentity(std::get<OrderingValue>(left.ordering),
                           std::get<OrderingValue>(right.ordering));
      note(stats, r.failure);
      if (r.result) {
        // The merged unit denotes the combined phrase.
        auto v = std::get<OrderingValue>(*r.result);
        v.denotation = denotationOf(cleaned);
        out.push_back({{cleaned, v}, cand.rule, "ordIdentity"});
      }
    }
  }
  return out;
}

std::vector<Constituent> unaryClosure(const std::vector<Constituent>& items) {
  std::vector<Constituent> out;
  std::set<std::string> keys;
  std::deque<Constituent> frontier(items.begin(), items.end());
  while (!frontier.empty()) {
    Constituent c = std::move(frontier.front());
    frontier.pop_front();
    if (!keys.insert(constituentKey(c)).second) continue;
    frontier.push_back({cleanup(c.synsem), c.ordering});
    if (isFn(c.ordering)) {
      if (auto skipped = ordSkip(std::get<OrderingFunction>(c.ordering)))
        frontier.push_back({c.synsem, std::move(*skipped)});
    }
    out.push_back(std::move(c));
  }
  return out;
}

Constituent lexicalConstituent(const LexEntry& entry, std::size_t variant,
                               VarPool& pool) {
  std::map<int, int> semMap;
  std::map<int, int> caseMap;
  SynSemConstituent ss{
      renameCategoryVars(entry.synsem.category, semMap, caseMap, pool),
      renameVars(entry.synsem.sem, semMap, pool)};
  OrderingCategory ord = entry.orderingVariants.at(variant);
  if (!isFn(ord)) {
    auto v = std::get<OrderingValue>(ord);
    v.denotation = renameVars(v.denotation, semMap, pool);
    ord = v;
  }
  return {std::move(ss), std::move(ord)};
}

std::vector<std::string> tokenize(const std::string& sentence) {
  std::istringstream in(sentence);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

namespace {

struct ChartItem {
  Constituent c;
  std::shared_ptr<const DerivationNode> deriv;
};

std::string showConstituent(const Constituent& c) {
  return c.synsem.str() + "  //  " + orderingStr(c.ordering);
}

}  // namespace

std::vector<ParseResult> parse(const std::vector<std::string>& tokens,
                               const Lexicon& lexicon, const DiscourseModel& dm,
                               const ParseOptions& opts, ParseStats* stats) {
  const int n = static_cast<int>(tokens.size());
  std::vector<ParseResult> results;
  if (n == 0) return results;

  VarPool pool;
  const int cellCount = (n + 1) * (n + 1);
  std::vector<std::vector<ChartItem>> cells(cellCount);
  std::vector<std::set<std::string>> keys(cellCount);
  auto at = [n](int i, int j) { return i * (n + 1) + j; };
  std::size_t itemCount = 0;

  // Insert plus closure under clean-up and the ordering skip rule.
  auto insert = [&](int i, int j, ChartItem item) {
    std::deque<ChartItem> frontier;
    frontier.push_back(std::move(item));
    while (!frontier.empty()) {
      ChartItem it = std::move(frontier.front());
      frontier.pop_front();
      if (!keys[at(i, j)].insert(constituentKey(it.c)).second) continue;
      if (++itemCount > opts.maxChartItems)
        throw ChartLimitError("chart item limit exceeded (" +
                              std::to_string(opts.maxChartItems) + ")");
      frontier.push_back({{cleanup(it.c.synsem), it.c.ordering}, it.deriv});
      if (isFn(it.c.ordering)) {
        if (auto skipped = ordSkip(std::get<OrderingFunction>(it.c.ordering)))
          frontier.push_back({{it.c.synsem, std::move(*skipped)}, it.deriv});
      }
      cells[at(i, j)].push_back(std::move(it));
    }
  };

  for (int i = 0; i < n; ++i) {
    auto entries = lexicon.lookup(tokens[i]);
    if (entries.empty())
      throw TokenUnknownError("unknown token '" + tokens[i] + "'");
    for (const LexEntry* entry : entries) {
      std::size_t variants =
          opts.orderingEnabled ? entry->orderingVariants.size() : 1;
      for (std::size_t v = 0; v < variants; ++v) {
        Constituent c = lexicalConstituent(*entry, v, pool);
        if (!opts.orderingEnabled)
          c.ordering = OrderingValue{denotationOf(c.synsem)};
        auto node = std::make_shared<DerivationNode>();
        node->rule = "lex";
        node->start = i;
        node->end = i + 1;
        node->show = tokens[i] + " := " + showConstituent(c);
        insert(i, i + 1, {std::move(c), std::move(node)});
      }
    }
  }

  for (int len = 2; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      int j = i + len;
      for (int k = i + 1; k < j; ++k) {
        // Cells grow during iteration (closure); index-based loops.
        const auto& lcell = cells[at(i, k)];
        const auto& rcell = cells[at(k, j)];
        for (std::size_t li = 0; li < lcell.size(); ++li) {
          for (std::size_t ri = 0; ri < rcell.size(); ++ri) {
            auto combined =
                combine(lcell[li].c, rcell[ri].c, dm, opts, stats);
            for (auto& comb : combined) {
              auto node = std::make_shared<DerivationNode>();
              node->rule = comb.synRule + "+" + comb.ordRule;
              node->start = i;
              node->end = j;
              node->show = showConstituent(comb.constituent);
              node->children = {lcell[li].deriv, rcell[ri].deriv};
              insert(i, j, {std::move(comb.constituent), std::move(node)});
            }
          }
        }
      }
    }
  }

  if (stats) stats->chartItems = itemCount;

  std::set<std::string> resultKeys;
  for (const auto& item : cells[at(0, n)]) {
    const auto& ss = item.c.synsem;
    if (!ss.category.isAtomic() || ss.category.kind() != CatKind::S) continue;
    // A case-marked clause is an argument, not a root sentence.
    if (std::holds_alternative<Case>(ss.category.caseTerm())) continue;
    if (!ss.sem.isGround()) continue;
    if (opts.orderingEnabled) {
      if (!isFn(item.c.ordering)) continue;
      auto node = complete(std::get<OrderingFunction>(item.c.ordering));
      if (!node) continue;
      std::string key = ss.sem.str() + " \x1f " + node->inlineStr();
      if (!resultKeys.insert(key).second) continue;
      results.push_back({ss.sem, std::move(*node), item.deriv});
    } else {
      std::string key = ss.sem.str();
      if (!resultKeys.insert(key).second) continue;
      results.push_back({ss.sem, std::nullopt, item.deriv});
    }
  }
  std::sort(results.begin(), results.end(),
            [](const ParseResult& a, const ParseResult& b) {
              auto ka = a.as.str() + (a.is ? a.is->inlineStr() : "");
              auto kb = b.as.str() + (b.is ? b.is->inlineStr() : "");
              return ka < kb;
            });
  return results;
}

}  // namespace mccg
