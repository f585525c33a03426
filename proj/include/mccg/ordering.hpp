#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mccg/category.hpp"

namespace mccg {

enum class Role { Topic, Focus, Ground };

const char* roleName(Role r);

// Tri-state discourse status. New is never a lexical mark; it only arises
// when a grammar asserts it, and it matters where a slot requires given.
enum class Givenness { Given, New, Unknown };

// unknown is neutral; given and new clash.
std::optional<Givenness> meetGivenness(Givenness a, Givenness b);

struct ISNode;

// A slot filler in an information structure: a semantic value, the
// inferrable zero-pronoun topic, or a completed embedded IS.
class ISValue {
 public:
  enum class Kind { Sem, Inferrable, Nested };

  ISValue();  // empty Sem; placeholder only
  static ISValue sem(SemTerm t);
  static ISValue inferrable();
  static ISValue nested(ISNode node);

  Kind kind() const;
  bool isSem() const { return kind() == Kind::Sem; }
  bool isInferrable() const { return kind() == Kind::Inferrable; }
  bool isNested() const { return kind() == Kind::Nested; }
  const SemTerm& term() const;
  const ISNode& node() const;

  bool operator==(const ISValue& o) const;
  bool operator!=(const ISValue& o) const { return !(*this == o); }
  std::string inlineStr() const;

 private:
  struct Rep;
  explicit ISValue(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Completed information structure: Topic plus a Comment made of Focus and
// Ground. The ground list starts with the verb's own semantics; later
// fillers follow in the order they were consumed.
struct ISNode {
  ISValue topic;
  ISValue focus;
  std::vector<ISValue> ground;

  bool operator==(const ISNode& o) const;
  bool operator!=(const ISNode& o) const { return !(*this == o); }
  std::string str(int indent = 0) const;  // box layout
  std::string inlineStr() const;
};

struct OrderingSlot {
  Role role = Role::Ground;
  Direction direction = Direction::Left;  // Left or Right only
  bool optional = false;
  bool repeatable = false;
  bool requiresGiven = false;
};

// Ordering category of a nonverbal element: its own semantics plus its
// discourse status.
struct OrderingValue {
  SemTerm denotation;
  Givenness given = Givenness::Unknown;
};

// Ordering category of a verb: the IS template under construction.
// pending is consumed strictly front-first (curried, outside-in).
struct OrderingFunction {
  std::optional<ISValue> topic;  // preset to Inferrable in the fn-variant
  std::optional<ISValue> focus;
  std::vector<ISValue> ground;
  std::vector<OrderingSlot> pending;
  // Inferrable-topic variant: an unfilled focus defaults to the verb's own
  // semantics at completion (verb-initial sentences).
  bool verbFocusFallback = false;
};

using OrderingCategory = std::variant<OrderingValue, OrderingFunction>;

std::string orderingStr(const OrderingCategory& ord);

struct DiscourseModel {
  std::set<std::string> entities;

  bool contains(const std::string& name) const { return entities.count(name) > 0; }
  static DiscourseModel fromFile(const std::string& path);
};

// True iff the filler may sit in a given-only position: inherently given,
// or every constant entity in its content is already evoked.
bool givennessCheck(Givenness given, const SemTerm& content,
                    const DiscourseModel& dm);

enum class OrdFailure {
  None,
  NotApplicable,
  GivennessViolation,
  IncompleteArgument,
  GivenClash,
};

const char* ordFailureName(OrdFailure f);

// Argument view handed to the ordering rules: the ISValue that would fill
// a slot, plus what the givenness check inspects.
struct OrdArg {
  ISValue value;
  Givenness given = Givenness::Unknown;
  SemTerm content;
};

struct OrdResult {
  std::optional<OrderingCategory> result;
  OrdFailure failure = OrdFailure::None;
};

// Simple Forward Application (>): the next pending slot looks right.
OrdResult ordForwardApply(const OrderingFunction& fn, const OrdArg& arg,
                          const DiscourseModel& dm);

// Simple Backward Application (<): the next pending slot looks left.
OrdResult ordBackwardApply(const OrdArg& arg, const OrderingFunction& fn,
                           const DiscourseModel& dm);

// Identity (=): two values with compatible content and discourse status
// merge into one IS unit. The caller replaces the placeholder denotation
// with the combined constituent's semantics.
OrdResult ordIdentity(const OrderingValue& a, const OrderingValue& b);

// X|(Y) => X: drop the next pending slot if optional.
std::optional<OrderingFunction> ordSkip(const OrderingFunction& fn);

// Close the template: every remaining slot must be optional (skipped).
// Fails when Topic is unfilled (standard variant) or Focus is unfilled
// and there is no verb-focus fallback.
std::optional<ISNode> complete(const OrderingFunction& fn);

// ---------------------------------------------------------------------
// IS patterns (used by the realizer, the corpus runner, and the CLI).

struct ISPattern;

class ISValuePattern {
 public:
  enum class Kind { Any, Inferrable, Term, Node };

  ISValuePattern();  // Any
  static ISValuePattern any();
  static ISValuePattern inferrable();
  static ISValuePattern term(SemTerm t);
  static ISValuePattern node(ISPattern p);

  Kind kind() const { return kind_; }
  bool matches(const ISValue& v) const;

  // '*', 'inferrable', a ground term, or '[topic=..; focus=..; ground~t,..]'.
  static ISValuePattern parse(std::string_view text);

 private:
  Kind kind_ = Kind::Any;
  SemTerm term_;
  std::shared_ptr<const ISPattern> node_;
};

struct ISPattern {
  enum class GroundMode { Any, Contains, Exact };

  ISValuePattern topic;
  ISValuePattern focus;
  GroundMode groundMode = GroundMode::Any;
  std::vector<ISValuePattern> ground;

  bool matches(const ISNode& node) const;
  static ISPattern exact(const ISNode& node);
  // 'topic=..; focus=..; ground~t1,t2' or 'ground=t1,t2' (exact multiset).
  static ISPattern parse(std::string_view text);
};

}  // namespace mccg
