#include "mccg/lexicon.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace mccg {

namespace {

// Per-entry parse state. Caseless S atoms share one anonymous case
// variable, so an adjunct S|{S} passes the clause's case through to its
// result. Named case variables ([C]) share by name.
struct EntryContext {
  VarPool pool;
  std::map<std::string, int> varNames;
  std::map<std::string, int> caseVarNames;
  std::optional<int> anonS;

  int anonSVar() {
    if (!anonS) anonS = pool.fresh();
    return *anonS;
  }
};

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool atEnd() {
    skipWs();
    return pos >= text.size();
  }
  char peek() {
    skipWs();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    skipWs();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c))
      throw Error(std::string("category syntax: expected '") + c + "' " +
                  what + " in '" + std::string(text) + "'");
  }
};

bool identChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) || c == '_' || c == '\'' || c == '-';
}

std::string readIdent(Cursor& cur) {
  cur.skipWs();
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() && identChar(cur.text[cur.pos])) ++cur.pos;
  if (cur.pos == start)
    throw Error("category syntax: identifier expected in '" +
                std::string(cur.text) + "'");
  return std::string(cur.text.substr(start, cur.pos - start));
}

Category parseCatExpr(Cursor& cur, EntryContext& ctx);

std::vector<ArgSlot> parseSlotList(Cursor& cur, EntryContext& ctx) {
  std::vector<ArgSlot> slots;
  cur.expect('{', "to open the argument multiset");
  if (cur.eat('}')) return slots;
  do {
    Direction dir = Direction::Any;
    if (cur.eat('<')) dir = Direction::Left;
    else if (cur.eat('>')) dir = Direction::Right;
    Category cat = parseCatExpr(cur, ctx);
    cur.expect(':', "before the slot variable");
    std::string varName = readIdent(cur);
    if (!isVariableName(varName))
      throw Error("category syntax: slot variable expected, got '" + varName +
                  "'");
    auto [it, inserted] = ctx.varNames.try_emplace(varName, 0);
    if (inserted) it->second = ctx.pool.fresh();
    slots.push_back({cat, dir, SemTerm::variable(it->second)});
  } while (cur.eat(','));
  cur.expect('}', "to close the argument multiset");
  return slots;
}

CaseTerm parseCaseBracket(Cursor& cur, EntryContext& ctx) {
  std::string name = readIdent(cur);
  cur.expect(']', "after the case feature");
  if (auto c = caseFromName(name)) return *c;
  if (isVariableName(name)) {
    auto [it, inserted] = ctx.caseVarNames.try_emplace(name, 0);
    if (inserted) it->second = ctx.pool.fresh();
    return CaseVar{it->second};
  }
  throw Error("unknown case '" + name + "'");
}

Category parseCatExpr(Cursor& cur, EntryContext& ctx) {
  if (cur.eat('(')) {
    Category result = parseCatExpr(cur, ctx);
    cur.expect('|', "between result and arguments");
    std::vector<ArgSlot> slots = parseSlotList(cur, ctx);
    cur.expect(')', "to close the category");
    return Category::function(std::move(result), std::move(slots));
  }
  std::string tok = readIdent(cur);
  static const std::map<std::string, Case> npShort = {
      {"Nn", Case::Nom}, {"Na", Case::Acc},  {"Ng", Case::Gen},
      {"Nd", Case::Dat}, {"Nabl", Case::Abl}, {"Nl", Case::Loc}};
  if (auto it = npShort.find(tok); it != npShort.end())
    return Category::atomic(CatKind::NP, it->second);
  if (tok == "N") return Category::atomic(CatKind::N, Case::Bare);
  if (tok == "S") {
    if (cur.peek() == '[') {
      cur.eat('[');
      return Category::atomic(CatKind::S, parseCaseBracket(cur, ctx));
    }
    return Category::atomic(CatKind::S, CaseVar{ctx.anonSVar()});
  }
  if (tok == "NP") {
    if (cur.peek() == '[') {
      cur.eat('[');
      return Category::atomic(CatKind::NP, parseCaseBracket(cur, ctx));
    }
    return Category::atomic(CatKind::NP, CaseVar{ctx.pool.fresh()});
  }
  throw Error("category syntax: unknown atom '" + tok + "'");
}

SynSemConstituent parseSynSemExpr(const std::string& text, EntryContext& ctx) {
  Cursor cur{text};
  Category cat = parseCatExpr(cur, ctx);
  cur.expect(':', "between category and semantics");
  std::size_t pos = cur.pos;
  SemTerm sem = parseTermPrefix(cur.text, pos, ctx.varNames, ctx.pool);
  cur.pos = pos;
  if (cur.eat('|')) {
    std::vector<ArgSlot> slots = parseSlotList(cur, ctx);
    cat = Category::function(std::move(cat), std::move(slots));
  }
  if (!cur.atEnd())
    throw Error("category syntax: trailing input in '" + text + "'");
  return {std::move(cat), std::move(sem)};
}

void collectSlots(const Category& cat, std::vector<const ArgSlot*>& out) {
  if (cat.isAtomic()) return;
  collectSlots(cat.result(), out);
  for (const auto& slot : cat.args()) {
    out.push_back(&slot);
    collectSlots(slot.category, out);
  }
}

void validateSynSem(const SynSemConstituent& ss, OrderingSpec spec) {
  std::function<void(const Category&)> checkShape = [&](const Category& c) {
    if (c.isAtomic()) return;
    if (c.args().empty()) throw Error("empty argument multiset");
    checkShape(c.result());
    for (const auto& s : c.args()) checkShape(s.category);
  };
  checkShape(ss.category);

  std::vector<const ArgSlot*> slots;
  collectSlots(ss.category, slots);
  std::set<int> semVars;
  ss.sem.variables(semVars);
  std::set<int> seen;
  for (const ArgSlot* slot : slots) {
    if (!slot->semVar.isVariable())
      throw Error("slot variable must be a variable");
    int id = slot->semVar.varId();
    if (!seen.insert(id).second)
      throw Error("duplicate slot variable " + slot->semVar.str());
    if (!semVars.count(id))
      throw Error("slot variable " + slot->semVar.str() +
                  " does not occur in the semantics");
  }
  if (spec == OrderingSpec::Template9) {
    if (ss.category.isAtomic() || ss.category.headKind() != CatKind::S)
      throw Error("template9 requires a verbal category (S head, arguments)");
  }
}

SemTerm denotationOf(const SynSemConstituent& ss) {
  // Nominal constituents denote themselves; verbal values (adjuncts)
  // contribute their head content word to the IS.
  return ss.isNounClass() ? ss.sem : ss.sem.headConstant();
}

std::vector<OrderingCategory> expandOrdering(const SynSemConstituent& ss,
                                             OrderingSpec spec,
                                             bool inherentGiven) {
  std::vector<OrderingCategory> variants;
  if (spec == OrderingSpec::Value) {
    variants.push_back(OrderingValue{
        denotationOf(ss), inherentGiven ? Givenness::Given : Givenness::Unknown});
    return variants;
  }
  SemTerm verb = ss.sem.headConstant();
  // Template (9): I /(Ground:G2) \Topic:T \(Ground:G1) \Focus:F, consumed
  // outside-in. Ground slots repeat; postverbal ground requires given.
  OrderingFunction full;
  full.ground = {ISValue::sem(verb)};
  full.pending = {
      {Role::Focus, Direction::Left, false, false, false},
      {Role::Ground, Direction::Left, true, true, false},
      {Role::Topic, Direction::Left, false, false, false},
      {Role::Ground, Direction::Right, true, true, true},
  };
  variants.push_back(full);
  // Inferrable-topic variant: the topic is an unrealized zero pronoun. Its
  // focus slot is optional; when skipped the verb itself carries the focus,
  // which is what licenses verb-initial all-background sentences.
  OrderingFunction inferrable;
  inferrable.topic = ISValue::inferrable();
  inferrable.ground = {ISValue::sem(verb)};
  inferrable.pending = {
      {Role::Focus, Direction::Left, true, false, false},
      {Role::Ground, Direction::Left, true, true, false},
      {Role::Ground, Direction::Right, true, true, true},
  };
  inferrable.verbFocusFallback = true;
  variants.push_back(std::move(inferrable));
  return variants;
}

}  // namespace

SynSemConstituent parseSynSem(const std::string& text) {
  EntryContext ctx;
  return parseSynSemExpr(text, ctx);
}

LexEntry makeLexEntry(const std::string& form, const std::string& synsemText,
                      OrderingSpec spec, bool inherentGiven) {
  EntryContext ctx;
  LexEntry entry;
  entry.form = form;
  entry.synsem = parseSynSemExpr(synsemText, ctx);
  entry.orderingSpec = spec;
  entry.inherentGiven = inherentGiven;
  validateSynSem(entry.synsem, spec);
  entry.orderingVariants = expandOrdering(entry.synsem, spec, inherentGiven);
  return entry;
}

void Lexicon::add(LexEntry entry) {
  entries_.push_back(std::move(entry));
  reindex();
}

void Lexicon::reindex() {
  byForm_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i)
    byForm_[entries_[i].form].push_back(i);
}

std::vector<const LexEntry*> Lexicon::lookup(const std::string& form) const {
  std::vector<const LexEntry*> out;
  auto it = byForm_.find(form);
  if (it == byForm_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

Lexicon Lexicon::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return fromString(buf.str(), path);
}

Lexicon Lexicon::fromString(const std::string& text,
                            const std::string& origin) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    auto defPos = line.find(":=");
    if (defPos == std::string::npos)
      throw LoadError(origin, lineNo, "expected 'form := synsem @ ordering'");
    std::string form = line.substr(0, defPos);
    {
      auto b = form.find_first_not_of(" \t");
      auto e = form.find_last_not_of(" \t");
      form = (b == std::string::npos) ? "" : form.substr(b, e - b + 1);
    }
    if (form.empty() || form.find_first_of(" \t") != std::string::npos)
      throw LoadError(origin, lineNo, "malformed word form");

    std::string rest = line.substr(defPos + 2);
    auto atPos = rest.rfind('@');
    if (atPos == std::string::npos)
      throw LoadError(origin, lineNo, "missing '@ ordering' part");
    std::string synsemText = rest.substr(0, atPos);
    std::vector<std::string> ordParts = splitTopLevel(rest.substr(atPos + 1), ',');
    if (ordParts.empty() || ordParts[0].empty())
      throw LoadError(origin, lineNo, "missing ordering spec");

    OrderingSpec spec;
    if (ordParts[0] == "template9") spec = OrderingSpec::Template9;
    else if (ordParts[0] == "value") spec = OrderingSpec::Value;
    else
      throw LoadError(origin, lineNo,
                      "unknown ordering spec '" + ordParts[0] + "'");
    bool given = false;
    for (std::size_t i = 1; i < ordParts.size(); ++i) {
      if (ordParts[i] == "given") given = true;
      else
        throw LoadError(origin, lineNo, "unknown flag '" + ordParts[i] + "'");
    }

    try {
      lex.entries_.push_back(makeLexEntry(form, synsemText, spec, given));
    } catch (const Error& e) {
      throw LoadError(origin, lineNo, e.what());
    }
  }
  lex.reindex();
  return lex;
}

namespace {

void countCaseVars(const Category& c, std::map<int, int>& counts) {
  if (c.isAtomic()) {
    if (std::holds_alternative<CaseVar>(c.caseTerm()))
      ++counts[std::get<CaseVar>(c.caseTerm()).id];
    return;
  }
  countCaseVars(c.result(), counts);
  for (const auto& s : c.args()) countCaseVars(s.category, counts);
}

std::string catToText(const Category& c, const std::map<int, std::string>& caseNames,
                      bool paren) {
  if (c.isAtomic()) {
    const CaseTerm& ct = c.caseTerm();
    switch (c.kind()) {
      case CatKind::N: return "N";
      case CatKind::NP: {
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
        auto it = caseNames.find(std::get<CaseVar>(ct).id);
        return it != caseNames.end() ? "NP[" + it->second + "]" : "NP";
      }
      case CatKind::S: {
        if (std::holds_alternative<Case>(ct))
          return std::string("S[") + caseName(std::get<Case>(ct)) + "]";
        return "S";
      }
    }
  }
  std::string body = catToText(c.result(), caseNames, true) + " | {";
  const auto& args = c.args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) body += ", ";
    body += directionMark(args[i].direction);
    body += catToText(args[i].category, caseNames, true);
    body += ":" + args[i].semVar.str();
  }
  body += "}";
  return paren ? "(" + body + ")" : body;
}

}  // namespace

std::string Lexicon::serialize() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    std::map<int, int> counts;
    countCaseVars(e.synsem.category, counts);
    std::map<int, std::string> names;
    int n = 0;
    for (const auto& [id, count] : counts) {
      if (count > 1) names[id] = "C" + std::to_string(++n);
    }
    // The outer function layer is written as `result : sem | {slots}`.
    std::string text;
    if (e.synsem.category.isFunction()) {
      Category outer = e.synsem.category;
      std::string slots;
      const auto& args = outer.args();
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) slots += ", ";
        slots += directionMark(args[i].direction);
        slots += catToText(args[i].category, names, true);
        slots += ":" + args[i].semVar.str();
      }
      text = catToText(outer.result(), names, outer.result().isFunction()) +
             " : " + e.synsem.sem.str() + " | {" + slots + "}";
    } else {
      text = catToText(e.synsem.category, names, false) + " : " +
             e.synsem.sem.str();
    }
    os << e.form << " := " << text << " @ "
       << (e.orderingSpec == OrderingSpec::Template9 ? "template9" : "value");
    if (e.inherentGiven) os << ", given";
    os << "\n";
  }
  return os.str();
}

LexEntry instantiate(SchemaKind kind, const std::string& form,
                     const std::string& predicate,
                     const std::vector<Case>& cases,
                     std::optional<Case> resultCase, bool inherentGiven) {
  auto requireArity = [&](std::size_t n) {
    if (cases.size() != n)
      throw ArityMismatchError("schema for '" + form + "' expects " +
                               std::to_string(n) + " case(s), got " +
                               std::to_string(cases.size()));
  };
  auto npSlot = [](Case c, int i) {
    return "NP[" + std::string(caseName(c)) + "]:X" + std::to_string(i);
  };
  auto varList = [](int n, int from = 1) {
    std::string s;
    for (int i = from; i < from + n; ++i) {
      if (!s.empty()) s += ", ";
      s += "X" + std::to_string(i);
    }
    return s;
  };
  auto npSlots = [&](const std::vector<Case>& cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!s.empty()) s += ", ";
      s += npSlot(cs[i], static_cast<int>(i) + 1);
    }
    return s;
  };

  std::string text;
  OrderingSpec spec = OrderingSpec::Template9;
  switch (kind) {
    case SchemaKind::Intransitive:
      requireArity(1);
      text = "S: " + predicate + "(X1) | {" + npSlots(cases) + "}";
      break;
    case SchemaKind::Transitive:
      requireArity(2);
      text = "S: " + predicate + "(" + varList(2) + ") | {" + npSlots(cases) + "}";
      break;
    case SchemaKind::Ditransitive:
      requireArity(3);
      text = "S: " + predicate + "(" + varList(3) + ") | {" + npSlots(cases) + "}";
      break;
    case SchemaKind::GerundVerb: {
      if (cases.empty())
        throw ArityMismatchError("gerund-verb needs at least a subject case");
      if (cases[0] != Case::Gen)
        throw ArityMismatchError("gerund-verb subject must be genitive");
      if (!resultCase)
        throw ArityMismatchError("gerund-verb needs a result case");
      text = "S[" + std::string(caseName(*resultCase)) + "]: " + predicate +
             "(" + varList(static_cast<int>(cases.size())) + ") | {" +
             npSlots(cases) + "}";
      break;
    }
    case SchemaKind::SententialAdjunct:
      requireArity(0);
      text = "S: " + predicate + "(P) | {S:P}";
      spec = OrderingSpec::Value;
      break;
    case SchemaKind::Adjective:
      requireArity(0);
      text = "NP[C]: " + predicate + "(X) | {>NP[C]:X}";
      spec = OrderingSpec::Value;
      break;
    case SchemaKind::Noun:
      requireArity(1);
      if (cases[0] == Case::Bare) text = "N: " + predicate;
      else
        text = "NP[" + std::string(caseName(cases[0])) + "]: " + predicate;
      spec = OrderingSpec::Value;
      break;
    case SchemaKind::IslandClauseHead: {
      if (cases.empty())
        throw ArityMismatchError("island-clause-head needs argument cases");
      text = "(S | {S:P}): " + predicate + "(" +
             varList(static_cast<int>(cases.size())) + ", P) | {" +
             npSlots(cases) + "}";
      break;
    }
    case SchemaKind::NonIslandClauseHead: {
      if (cases.empty())
        throw ArityMismatchError("nonisland-clause-head needs argument cases");
      text = "S: " + predicate + "(" +
             varList(static_cast<int>(cases.size())) + ", P) | {S:P, " +
             npSlots(cases) + "}";
      break;
    }
  }
  return makeLexEntry(form, text, spec, inherentGiven);
}

}  // namespace mccg
