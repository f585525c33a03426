#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mccg/lexicon.hpp"

using namespace mccg;

namespace {

// Constituents meeting in a rule come from independent sources; give each
// one globally fresh variables, as the chart does for lexical items.
SynSemConstituent ss(const std::string& text) {
  static VarPool pool;
  return standardizeApart(parseSynSem(text), pool);
}

bool sameConstituent(const SynSemConstituent& a, const std::string& expected) {
  return canonicalKey(a) == canonicalKey(parseSynSem(expected));
}

}  // namespace

TEST_CASE("forward application consumes a rightward-compatible slot") {
  auto verb = ss("S: see(X, Y) | {Nn:X, Na:Y}");
  auto ahmet = ss("Na: Ahmet");
  auto out = forwardApply(verb, ahmet);
  REQUIRE(out.size() == 1);
  CHECK(sameConstituent(out[0], "S: see(X, Ahmet) | {Nn:X}"));

  // Gerund clause applying to its genitive subject.
  auto gerund = ss("S[acc]: go(Y) | {Ng:Y}");
  auto fatma = ss("Ng: Fatma");
  auto out2 = forwardApply(gerund, fatma);
  REQUIRE(out2.size() == 1);
  CHECK(cleanup(out2[0]).sem == parseGroundTerm("go(Fatma)"));
  CHECK(std::get<Case>(cleanup(out2[0]).category.caseTerm()) == Case::Acc);

  // No genitive slot on the transitive verb.
  CHECK(forwardApply(verb, fatma).empty());
}

TEST_CASE("backward application mirrors, ex. (7) derivation") {
  auto verb = ss("S: see(X, Y) | {Nn:X, Na:Y}");
  auto fatma = ss("Nn: Fatma");
  auto ahmet = ss("Na: Ahmet");

  auto step1 = backwardApply(fatma, verb);
  REQUIRE(step1.size() == 1);
  CHECK(sameConstituent(step1[0], "S: see(Fatma, Y) | {Na:Y}"));

  auto step2 = backwardApply(ahmet, step1[0]);
  REQUIRE(step2.size() == 1);
  auto sentence = cleanup(step2[0]);
  CHECK(sentence.category.isAtomic());
  CHECK(sentence.sem == parseGroundTerm("see(Fatma, Ahmet)"));
}

TEST_CASE("a rightward slot cannot be consumed backward") {
  auto modifier = ss("NP[acc]: little(X) | {>N:X}");
  auto noun = ss("N: adam");
  CHECK(backwardApply(noun, modifier).empty());
  CHECK(forwardApply(modifier, noun).size() == 1);
}

TEST_CASE("left-direction features gate application (verb-final entries)") {
  auto verb = ss("S: eat(X, Y) | {<Nn:X, <Na:Y}");
  auto subject = ss("Nn: he");
  CHECK(forwardApply(verb, subject).empty());
  CHECK(backwardApply(subject, verb).size() == 1);
}

TEST_CASE("cleanup rewrites an empty argument set to the result") {
  auto saturated = SynSemConstituent{
      Category::function(Category::atomic(CatKind::S, CaseVar{1}), {}),
      parseGroundTerm("see(Fatma, Ahmet)")};
  auto out = cleanup(saturated);
  CHECK(out.category.isAtomic());
  CHECK(out.sem == saturated.sem);

  // Atomic input is unchanged.
  auto atom = ss("Nn: Fatma");
  CHECK(canonicalKey(cleanup(atom)) == canonicalKey(atom));

  // Only the empty layer goes; the adjunct inside stays.
  auto adjunct = ss("S: yesterday(P) | {S:P}");
  auto wrapped = SynSemConstituent{Category::function(adjunct.category, {}),
                                   adjunct.sem};
  CHECK(canonicalKey(cleanup(wrapped)) == canonicalKey(adjunct));
}

TEST_CASE("forward composition nests the secondary semantics") {
  // dün composing into a case-marked gerund: the case propagates to the
  // adjunct's result.
  auto adjunct = ss("S: yesterday(P) | {S:P}");
  auto gerund = ss("S[acc]: go(Y) | {Ng:Y}");
  auto out = forwardCompose(adjunct, gerund);
  CHECK_FALSE(out.restrictionBlocked);
  REQUIRE(out.results.size() == 1);
  CHECK(sameConstituent(out.results[0], "S[acc]: yesterday(go(Y)) | {Ng:Y}"));

  // Plain transitive: S|{S} + S|{Nn,Na} => S|{Nn,Na} with wrapped semantics.
  auto verb = ss("S: see(X, Y) | {Nn:X, Na:Y}");
  auto out2 = forwardCompose(adjunct, verb);
  REQUIRE(out2.results.size() == 1);
  CHECK(sameConstituent(out2.results[0],
                        "S: yesterday(see(X, Y)) | {Nn:X, Na:Y}"));
}

TEST_CASE("backward composition collapses argument multisets, ex. (16)") {
  auto gerund = ss("S[acc]: go(Y) | {Ng:Y}");
  auto matrix = ss("S: know(X, P) | {Nn:X, S[acc]:P}");
  auto out = backwardCompose(gerund, matrix);
  REQUIRE(out.results.size() == 1);
  CHECK(sameConstituent(out.results[0], "S: know(X, go(Y)) | {Nn:X, Ng:Y}"));

  // The result's argument multiset is the disjoint union of what remains.
  CHECK(out.results[0].category.args().size() ==
        matrix.category.args().size() - 1 + gerund.category.args().size());
}

TEST_CASE("composition needs two functions") {
  auto fatma = ss("Nn: Fatma");
  auto verb = ss("S: see(X, Y) | {Nn:X, Na:Y}");
  CHECK(backwardCompose(fatma, verb).results.empty());
  CHECK_FALSE(backwardCompose(fatma, verb).restrictionBlocked);
  CHECK(forwardCompose(verb, fatma).results.empty());
}

TEST_CASE("restriction (8c): nominal shared categories block composition") {
  // Adjective and verb must not combine before the noun does.
  auto adjective = ss("NP[C]: little(X) | {>NP[C]:X}");
  auto verb = ss("S: see(X, Y) | {Nn:X, Na:Y}");
  auto blocked = backwardCompose(adjective, verb);
  CHECK(blocked.results.empty());
  CHECK(blocked.restrictionBlocked);

  // With the restriction off (Warlpiri-style grammar) it goes through.
  RuleConfig permissive;
  permissive.blockNounComposition = false;
  auto allowed = backwardCompose(adjective, verb, permissive);
  CHECK_FALSE(allowed.restrictionBlocked);
  CHECK(allowed.results.size() == 2);  // either NP slot of the verb
}

TEST_CASE("higher-order slots match function results recursively") {
  // A slot seeking an adjunct S|{S} accepts the island head's result.
  auto island = ss("(S | {S:P}): f(X, Y, P) | {Nn:X, Na:Y}");
  auto seeker = ss("S: g(Q, R) | {(S | {S:R}):Q, Nn:R}");
  auto out = forwardCompose(seeker, island);
  REQUIRE(out.results.size() == 1);
  CHECK(out.results[0].category.args().size() == 3);

  // An atomic slot does not match a function result.
  auto atomicSeeker = ss("S: g(Q) | {S[acc]:Q}");
  CHECK(forwardCompose(atomicSeeker, island).results.empty());
}

TEST_CASE("one result per matching slot") {
  auto verb = ss("S: p(X, Y) | {Na:X, Na:Y}");
  auto filler = ss("Na: a");
  auto out = forwardApply(verb, filler);
  CHECK(out.size() == 2);
  CHECK(canonicalKey(out[0]) != canonicalKey(out[1]));
}

TEST_CASE("standardizeApart renames without changing structure") {
  VarPool pool;
  auto open = parseSynSem("S: see(X, Y) | {Nn:X, Na:Y}");
  auto renamed = standardizeApart(open, pool);
  CHECK(canonicalKey(renamed) == canonicalKey(open));
  CHECK(renamed.sem != open.sem);  // fresh variable ids

  auto ground = parseSynSem("Nn: Fatma");
  CHECK(standardizeApart(ground, pool).sem == ground.sem);

  // Two instances of one entry get disjoint variables.
  auto a = standardizeApart(open, pool);
  auto b = standardizeApart(open, pool);
  std::set<int> va, vb;
  a.sem.variables(va);
  b.sem.variables(vb);
  for (int v : va) CHECK(vb.count(v) == 0);
}
