#include "mccg/ordering.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mccg {

const char* roleName(Role r) {
  switch (r) {
    case Role::Topic: return "Topic";
    case Role::Focus: return "Focus";
    case Role::Ground: return "Ground";
  }
  return "?";
}

std::optional<Givenness> meetGivenness(Givenness a, Givenness b) {
  if (a == Givenness::Unknown) return b;
  if (b == Givenness::Unknown) return a;
  if (a == b) return a;
  return std::nullopt;
}

struct ISValue::Rep {
  Kind kind = Kind::Sem;
  SemTerm term;
  std::shared_ptr<const ISNode> node;
};

ISValue::ISValue() : rep_(std::make_shared<Rep>()) {}

ISValue ISValue::sem(SemTerm t) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Sem;
  rep->term = std::move(t);
  return ISValue(std::move(rep));
}

ISValue ISValue::inferrable() {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Inferrable;
  return ISValue(std::move(rep));
}

ISValue ISValue::nested(ISNode node) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::Nested;
  rep->node = std::make_shared<const ISNode>(std::move(node));
  return ISValue(std::move(rep));
}

ISValue::Kind ISValue::kind() const { return rep_->kind; }

const SemTerm& ISValue::term() const {
  if (!isSem()) throw Error("term() on non-semantic IS value");
  return rep_->term;
}

const ISNode& ISValue::node() const {
  if (!isNested()) throw Error("node() on non-nested IS value");
  return *rep_->node;
}

bool ISValue::operator==(const ISValue& o) const {
  if (rep_ == o.rep_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Sem: return rep_->term == o.rep_->term;
    case Kind::Inferrable: return true;
    case Kind::Nested: return *rep_->node == *o.rep_->node;
  }
  return false;
}

std::string ISValue::inlineStr() const {
  switch (kind()) {
    case Kind::Sem: return rep_->term.str();
    case Kind::Inferrable: return "(inferrable)";
    case Kind::Nested: return rep_->node->inlineStr();
  }
  return "?";
}

bool ISNode::operator==(const ISNode& o) const {
  return topic == o.topic && focus == o.focus && ground == o.ground;
}

namespace {

void writeValue(const ISValue& v, int indent, std::ostringstream& os);

void writeNode(const ISNode& n, int indent, std::ostringstream& os) {
  std::string pad(indent, ' ');
  os << pad << "Topic:";
  writeValue(n.topic, indent, os);
  os << pad << "Comment:\n";
  os << pad << "  Focus:";
  writeValue(n.focus, indent + 2, os);
  os << pad << "  Ground: [";
  for (std::size_t i = 0; i < n.ground.size(); ++i) {
    if (i) os << ", ";
    os << n.ground[i].inlineStr();
  }
  os << "]\n";
}

void writeValue(const ISValue& v, int indent, std::ostringstream& os) {
  if (v.isNested()) {
    os << "\n";
    writeNode(v.node(), indent + 2, os);
  } else {
    os << "  " << v.inlineStr() << "\n";
  }
}

}  // namespace

std::string ISNode::str(int indent) const {
  std::ostringstream os;
  writeNode(*this, indent, os);
  return os.str();
}

std::string ISNode::inlineStr() const {
  std::string s = "{topic=" + topic.inlineStr() + "; focus=" + focus.inlineStr() +
                  "; ground=[";
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (i) s += ", ";
    s += ground[i].inlineStr();
  }
  return s + "]}";
}

std::string orderingStr(const OrderingCategory& ord) {
  if (std::holds_alternative<OrderingValue>(ord)) {
    const auto& v = std::get<OrderingValue>(ord);
    std::string s = v.denotation.str();
    if (v.given == Givenness::Given) s += " [given]";
    if (v.given == Givenness::New) s += " [new]";
    return s;
  }
  const auto& f = std::get<OrderingFunction>(ord);
  std::string s = "IS{";
  s += "topic=" + (f.topic ? f.topic->inlineStr() : std::string("_"));
  s += "; focus=" + (f.focus ? f.focus->inlineStr() : std::string("_"));
  s += "; ground=[";
  for (std::size_t i = 0; i < f.ground.size(); ++i) {
    if (i) s += ", ";
    s += f.ground[i].inlineStr();
  }
  s += "]}";
  for (const auto& slot : f.pending) {
    s += f.verbFocusFallback && slot.role == Role::Focus ? " \\*" : " ";
    s += slot.direction == Direction::Right ? "/" : "\\";
    s += slot.optional ? "(" : "";
    s += roleName(slot.role);
    s += slot.optional ? ")" : "";
  }
  return s;
}

DiscourseModel DiscourseModel::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open discourse model file: " + path);
  DiscourseModel dm;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) dm.entities.insert(word);
  }
  return dm;
}

bool givennessCheck(Givenness given, const SemTerm& content,
                    const DiscourseModel& dm) {
  if (given == Givenness::Given) return true;
  if (given == Givenness::New) return false;
  std::set<std::string> consts;
  content.constants(consts);
  return std::all_of(consts.begin(), consts.end(),
                     [&](const std::string& c) { return dm.contains(c); });
}

const char* ordFailureName(OrdFailure f) {
  switch (f) {
    case OrdFailure::None: return "none";
    case OrdFailure::NotApplicable: return "not-applicable";
    case OrdFailure::GivennessViolation: return "givenness-violation";
    case OrdFailure::IncompleteArgument: return "incomplete-argument";
    case OrdFailure::GivenClash: return "given-clash";
  }
  return "?";
}

namespace {

OrdResult fill(const OrderingFunction& fn, bool forward, const OrdArg& arg,
               const DiscourseModel& dm) {
  if (fn.pending.empty()) return {std::nullopt, OrdFailure::NotApplicable};
  const OrderingSlot& slot = fn.pending.front();
  bool wantRight = slot.direction == Direction::Right;
  if (wantRight != forward) return {std::nullopt, OrdFailure::NotApplicable};
  if (slot.requiresGiven && !givennessCheck(arg.given, arg.content, dm))
    return {std::nullopt, OrdFailure::GivennessViolation};

  OrderingFunction next = fn;
  switch (slot.role) {
    case Role::Topic: next.topic = arg.value; break;
    case Role::Focus: next.focus = arg.value; break;
    case Role::Ground: next.ground.push_back(arg.value); break;
  }
  if (!slot.repeatable) next.pending.erase(next.pending.begin());
  return {OrderingCategory(std::move(next)), OrdFailure::None};
}

bool hasFreeVars(const SemTerm& t) {
  std::set<int> vars;
  t.variables(vars);
  return !vars.empty();
}

}  // namespace

OrdResult ordForwardApply(const OrderingFunction& fn, const OrdArg& arg,
                          const DiscourseModel& dm) {
  return fill(fn, true, arg, dm);
}

OrdResult ordBackwardApply(const OrdArg& arg, const OrderingFunction& fn,
                           const DiscourseModel& dm) {
  return fill(fn, false, arg, dm);
}

OrdResult ordIdentity(const OrderingValue& a, const OrderingValue& b) {
  auto given = meetGivenness(a.given, b.given);
  if (!given) return {std::nullopt, OrdFailure::GivenClash};
  // Variables unify with anything; a value still containing free variables
  // (an unsaturated modifier) merges with any partner.
  auto mgu = unifySem(a.denotation, b.denotation);
  if (!mgu && !hasFreeVars(a.denotation) && !hasFreeVars(b.denotation))
    return {std::nullopt, OrdFailure::NotApplicable};
  SemTerm merged = mgu ? mgu->apply(a.denotation) : a.denotation;
  return {OrderingCategory(OrderingValue{std::move(merged), *given}),
          OrdFailure::None};
}

std::optional<OrderingFunction> ordSkip(const OrderingFunction& fn) {
  if (fn.pending.empty() || !fn.pending.front().optional) return std::nullopt;
  OrderingFunction next = fn;
  OrderingSlot dropped = next.pending.front();
  next.pending.erase(next.pending.begin());
  // Skipping the focus in the verb-focus variant commits to a verb-initial
  // reading: no preverbal slot may be filled afterwards, otherwise the
  // immediately preverbal position would no longer carry the focus.
  if (dropped.role == Role::Focus && next.verbFocusFallback) {
    std::erase_if(next.pending, [](const OrderingSlot& s) {
      return s.direction == Direction::Left;
    });
  }
  return next;
}

std::optional<ISNode> complete(const OrderingFunction& fn) {
  for (const auto& slot : fn.pending) {
    if (!slot.optional) return std::nullopt;
  }
  if (!fn.topic) return std::nullopt;
  ISValue focus;
  if (fn.focus) {
    focus = *fn.focus;
  } else if (fn.verbFocusFallback && !fn.ground.empty()) {
    focus = fn.ground.front();
  } else {
    return std::nullopt;
  }
  return ISNode{*fn.topic, focus, fn.ground};
}

// --------------------------------------------------------------------
// Patterns

ISValuePattern::ISValuePattern() = default;

ISValuePattern ISValuePattern::any() { return ISValuePattern(); }

ISValuePattern ISValuePattern::inferrable() {
  ISValuePattern p;
  p.kind_ = Kind::Inferrable;
  return p;
}

ISValuePattern ISValuePattern::term(SemTerm t) {
  ISValuePattern p;
  p.kind_ = Kind::Term;
  p.term_ = std::move(t);
  return p;
}

ISValuePattern ISValuePattern::node(ISPattern pat) {
  ISValuePattern p;
  p.kind_ = Kind::Node;
  p.node_ = std::make_shared<const ISPattern>(std::move(pat));
  return p;
}

bool ISValuePattern::matches(const ISValue& v) const {
  switch (kind_) {
    case Kind::Any: return true;
    case Kind::Inferrable: return v.isInferrable();
    case Kind::Term: return v.isSem() && v.term() == term_;
    case Kind::Node: return v.isNested() && node_->matches(v.node());
  }
  return false;
}

ISValuePattern ISValuePattern::parse(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
  if (s.empty() || s == "*") return any();
  if (s == "inferrable") return inferrable();
  if (s.front() == '[') {
    if (s.back() != ']') throw Error("IS pattern: missing ']' in '" + s + "'");
    return node(ISPattern::parse(std::string_view(s).substr(1, s.size() - 2)));
  }
  return term(parseGroundTerm(s));
}

namespace {

bool matchGround(const std::vector<ISValuePattern>& pats, std::size_t i,
                 const std::vector<ISValue>& ground, std::vector<bool>& used,
                 bool exact) {
  if (i == pats.size()) {
    if (!exact) return true;
    return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
  }
  for (std::size_t j = 0; j < ground.size(); ++j) {
    if (used[j]) continue;
    if (!pats[i].matches(ground[j])) continue;
    used[j] = true;
    if (matchGround(pats, i + 1, ground, used, exact)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool ISPattern::matches(const ISNode& node) const {
  if (!topic.matches(node.topic)) return false;
  if (!focus.matches(node.focus)) return false;
  switch (groundMode) {
    case GroundMode::Any: return true;
    case GroundMode::Exact:
      if (ground.size() != node.ground.size()) return false;
      break;
    case GroundMode::Contains:
      if (ground.size() > node.ground.size()) return false;
      break;
  }
  std::vector<bool> used(node.ground.size(), false);
  return matchGround(ground, 0, node.ground, used,
                     groundMode == GroundMode::Exact);
}

namespace {

ISValuePattern exactValuePattern(const ISValue& v) {
  switch (v.kind()) {
    case ISValue::Kind::Sem: return ISValuePattern::term(v.term());
    case ISValue::Kind::Inferrable: return ISValuePattern::inferrable();
    case ISValue::Kind::Nested:
      return ISValuePattern::node(ISPattern::exact(v.node()));
  }
  return ISValuePattern::any();
}

}  // namespace

ISPattern ISPattern::exact(const ISNode& node) {
  ISPattern p;
  p.topic = exactValuePattern(node.topic);
  p.focus = exactValuePattern(node.focus);
  p.groundMode = GroundMode::Exact;
  for (const auto& g : node.ground) p.ground.push_back(exactValuePattern(g));
  return p;
}

ISPattern ISPattern::parse(std::string_view text) {
  ISPattern p;
  for (const std::string& field : splitTopLevel(text, ';')) {
    if (field.empty()) continue;
    auto eq = field.find_first_of("=~");
    if (eq == std::string::npos)
      throw Error("IS pattern: expected key=value in '" + field + "'");
    std::string key = field.substr(0, eq);
    auto kb = key.find_first_not_of(" \t");
    auto ke = key.find_last_not_of(" \t");
    key = (kb == std::string::npos) ? "" : key.substr(kb, ke - kb + 1);
    std::string rest = field.substr(eq + 1);
    if (key == "topic") {
      p.topic = ISValuePattern::parse(rest);
    } else if (key == "focus") {
      p.focus = ISValuePattern::parse(rest);
    } else if (key == "ground") {
      p.groundMode =
          field[eq] == '~' ? GroundMode::Contains : GroundMode::Exact;
      if (splitTopLevel(rest, ',').size() == 1 &&
          splitTopLevel(rest, ',')[0] == "*") {
        p.groundMode = GroundMode::Any;
        continue;
      }
      for (const std::string& item : splitTopLevel(rest, ','))
        p.ground.push_back(ISValuePattern::parse(item));
    } else {
      throw Error("IS pattern: unknown field '" + key + "'");
    }
  }
  return p;
}

}  // namespace mccg
