#include "mccg/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mccg {

const char* caseName(Case c) {
  switch (c) {
    case Case::Nom: return "nom";
    case Case::Acc: return "acc";
    case Case::Gen: return "gen";
    case Case::Dat: return "dat";
    case Case::Abl: return "abl";
    case Case::Loc: return "loc";
    case Case::Bare: return "bare";
  }
  return "?";
}

std::optional<Case> caseFromName(std::string_view name) {
  static const std::pair<std::string_view, Case> table[] = {
      {"nom", Case::Nom}, {"acc", Case::Acc}, {"gen", Case::Gen},
      {"dat", Case::Dat}, {"abl", Case::Abl}, {"loc", Case::Loc},
      {"bare", Case::Bare}};
  for (const auto& [n, c] : table) {
    if (n == name) return c;
  }
  return std::nullopt;
}

bool sameCaseTerm(const CaseTerm& a, const CaseTerm& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<Case>(a))
    return std::get<Case>(a) == std::get<Case>(b);
  return std::get<CaseVar>(a) == std::get<CaseVar>(b);
}

std::string caseTermStr(const CaseTerm& c) {
  if (std::holds_alternative<Case>(c)) return caseName(std::get<Case>(c));
  return "?" + std::to_string(std::get<CaseVar>(c).id);
}

SemTerm::SemTerm() : SemTerm(constant("")) {}

SemTerm SemTerm::variable(int id) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Variable;
  rep->var = id;
  return SemTerm(std::move(rep));
}

SemTerm SemTerm::constant(std::string name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Constant;
  rep->name = std::move(name);
  return SemTerm(std::move(rep));
}

SemTerm SemTerm::compound(std::string functor, std::vector<SemTerm> args) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Compound;
  rep->name = std::move(functor);
  rep->args = std::move(args);
  return SemTerm(std::move(rep));
}

int SemTerm::varId() const {
  if (!isVariable()) throw Error("varId on non-variable term");
  return rep_->var;
}

const std::string& SemTerm::name() const { return rep_->name; }

const std::vector<SemTerm>& SemTerm::args() const { return rep_->args; }

bool SemTerm::isGround() const {
  switch (kind()) {
    case Kind::Variable: return false;
    case Kind::Constant: return true;
    case Kind::Compound:
      return std::all_of(rep_->args.begin(), rep_->args.end(),
                         [](const SemTerm& t) { return t.isGround(); });
  }
  return false;
}

void SemTerm::variables(std::set<int>& out) const {
  switch (kind()) {
    case Kind::Variable: out.insert(rep_->var); break;
    case Kind::Constant: break;
    case Kind::Compound:
      for (const auto& a : rep_->args) a.variables(out);
      break;
  }
}

void SemTerm::constants(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Variable: break;
    case Kind::Constant: out.insert(rep_->name); break;
    case Kind::Compound:
      for (const auto& a : rep_->args) a.constants(out);
      break;
  }
}

SemTerm SemTerm::headConstant() const {
  if (isCompound()) return constant(rep_->name);
  return *this;
}

std::string SemTerm::str() const {
  switch (kind()) {
    case Kind::Variable: return "X" + std::to_string(rep_->var);
    case Kind::Constant: return rep_->name;
    case Kind::Compound: {
      std::string s = rep_->name + "(";
      for (std::size_t i = 0; i < rep_->args.size(); ++i) {
        if (i) s += ", ";
        s += rep_->args[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

bool SemTerm::operator==(const SemTerm& o) const {
  if (rep_ == o.rep_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Variable: return rep_->var == o.rep_->var;
    case Kind::Constant: return rep_->name == o.rep_->name;
    case Kind::Compound:
      return rep_->name == o.rep_->name && rep_->args == o.rep_->args;
  }
  return false;
}

SemTerm Substitution::apply(const SemTerm& t) const {
  switch (t.kind()) {
    case SemTerm::Kind::Variable: {
      auto it = sem_.find(t.varId());
      if (it == sem_.end()) return t;
      return apply(it->second);
    }
    case SemTerm::Kind::Constant: return t;
    case SemTerm::Kind::Compound: {
      std::vector<SemTerm> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(apply(a));
      return SemTerm::compound(t.name(), std::move(args));
    }
  }
  return t;
}

CaseTerm Substitution::resolve(const CaseTerm& c) const {
  if (std::holds_alternative<Case>(c)) return c;
  auto it = case_.find(std::get<CaseVar>(c).id);
  if (it == case_.end()) return c;
  return resolve(it->second);
}

bool Substitution::bindVar(int var, const SemTerm& t) {
  SemTerm resolved = apply(t);
  if (resolved.isVariable() && resolved.varId() == var) return true;
  std::set<int> vars;
  resolved.variables(vars);
  if (vars.count(var)) return false;  // occurs check
  sem_.emplace(var, std::move(resolved));
  return true;
}

bool Substitution::unifyTerms(const SemTerm& a, const SemTerm& b) {
  SemTerm x = apply(a);
  SemTerm y = apply(b);
  if (x.isVariable()) return bindVar(x.varId(), y);
  if (y.isVariable()) return bindVar(y.varId(), x);
  if (x.kind() != y.kind()) return false;
  if (x.isConstant()) return x.name() == y.name();
  if (x.name() != y.name() || x.args().size() != y.args().size()) return false;
  for (std::size_t i = 0; i < x.args().size(); ++i) {
    if (!unifyTerms(x.args()[i], y.args()[i])) return false;
  }
  return true;
}

bool Substitution::unifyCases(const CaseTerm& a, const CaseTerm& b) {
  CaseTerm x = resolve(a);
  CaseTerm y = resolve(b);
  if (std::holds_alternative<CaseVar>(x)) {
    if (std::holds_alternative<CaseVar>(y) &&
        std::get<CaseVar>(x) == std::get<CaseVar>(y))
      return true;
    case_.emplace(std::get<CaseVar>(x).id, y);
    return true;
  }
  if (std::holds_alternative<CaseVar>(y)) {
    case_.emplace(std::get<CaseVar>(y).id, x);
    return true;
  }
  return std::get<Case>(x) == std::get<Case>(y);
}

std::string Substitution::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, t] : sem_) {
    if (!first) os << ", ";
    first = false;
    os << "X" << v << " -> " << apply(t).str();
  }
  for (const auto& [v, c] : case_) {
    if (!first) os << ", ";
    first = false;
    os << "?" << v << " -> " << caseTermStr(resolve(c));
  }
  os << "}";
  return os.str();
}

std::optional<Substitution> unifySem(const SemTerm& a, const SemTerm& b) {
  Substitution s;
  if (!s.unifyTerms(a, b)) return std::nullopt;
  return s;
}

SemTerm renameVars(const SemTerm& t, std::map<int, int>& mapping,
                   VarPool& pool) {
  switch (t.kind()) {
    case SemTerm::Kind::Variable: {
      auto [it, inserted] = mapping.try_emplace(t.varId(), 0);
      if (inserted) it->second = pool.fresh();
      return SemTerm::variable(it->second);
    }
    case SemTerm::Kind::Constant: return t;
    case SemTerm::Kind::Compound: {
      std::vector<SemTerm> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(renameVars(a, mapping, pool));
      return SemTerm::compound(t.name(), std::move(args));
    }
  }
  return t;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
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
    throw Error("term syntax: identifier expected at '" +
                std::string(cur.text.substr(cur.pos)) + "'");
  return std::string(cur.text.substr(start, cur.pos - start));
}

SemTerm parseTermAt(Cursor& cur, std::map<std::string, int>& varNames,
                    VarPool& pool) {
  std::string name = readIdent(cur);
  if (cur.peek() == '(') {
    cur.eat('(');
    std::vector<SemTerm> args;
    if (!cur.eat(')')) {
      do {
        args.push_back(parseTermAt(cur, varNames, pool));
      } while (cur.eat(','));
      if (!cur.eat(')')) throw Error("term syntax: expected ')' in " + std::string(cur.text));
    }
    if (args.empty()) throw Error("term syntax: empty argument list in " + std::string(cur.text));
    return SemTerm::compound(std::move(name), std::move(args));
  }
  if (isVariableName(name)) {
    auto [it, inserted] = varNames.try_emplace(name, 0);
    if (inserted) it->second = pool.fresh();
    return SemTerm::variable(it->second);
  }
  return SemTerm::constant(std::move(name));
}

}  // namespace

bool isVariableName(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'A' || name[0] > 'Z') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

SemTerm parseTerm(std::string_view text, std::map<std::string, int>& varNames,
                  VarPool& pool) {
  Cursor cur{text};
  SemTerm t = parseTermAt(cur, varNames, pool);
  if (!cur.atEnd())
    throw Error("term syntax: trailing input in '" + std::string(text) + "'");
  return t;
}

SemTerm parseTermPrefix(std::string_view text, std::size_t& pos,
                        std::map<std::string, int>& varNames, VarPool& pool) {
  Cursor cur{text, pos};
  SemTerm t = parseTermAt(cur, varNames, pool);
  pos = cur.pos;
  return t;
}

SemTerm parseGroundTerm(std::string_view text) {
  std::map<std::string, int> names;
  VarPool pool;
  SemTerm t = parseTerm(text, names, pool);
  if (!t.isGround())
    throw Error("expected a ground term, got '" + std::string(text) + "'");
  return t;
}

std::vector<std::string> splitTopLevel(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  for (auto& p : parts) {
    auto b = p.find_first_not_of(" \t");
    auto e = p.find_last_not_of(" \t");
    p = (b == std::string::npos) ? "" : p.substr(b, e - b + 1);
  }
  return parts;
}

}  // namespace mccg
