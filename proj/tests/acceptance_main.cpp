// Acceptance suite: one check per criterion, one PASS/FAIL line each.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "mccg/corpus.hpp"
#include "mccg/realizer.hpp"

using namespace mccg;

namespace {

const std::string kData = MCCG_DATA_DIR;

const Lexicon& lexicon() {
  static Lexicon lex = Lexicon::fromFile(kData + "/lexicon/turkish_paper.lex");
  return lex;
}

DiscourseModel dm(std::initializer_list<std::string> entities) {
  DiscourseModel m;
  m.entities.insert(entities.begin(), entities.end());
  return m;
}

std::vector<ParseResult> run(const std::string& sentence,
                             DiscourseModel model = {},
                             ParseOptions opts = {},
                             ParseStats* stats = nullptr) {
  return parse(tokenize(sentence), lexicon(), model, opts, stats);
}

struct Check {
  std::string name;
  std::function<void(std::ostringstream&)> body;  // throws/writes on failure
};

#define EXPECT(cond, msg)                                  \
  do {                                                     \
    if (!(cond)) problems << "    " << (msg) << "\n";      \
  } while (0)

bool existsIS(const std::vector<ParseResult>& results,
              const std::string& pattern) {
  auto p = ISPattern::parse(pattern);
  return std::any_of(results.begin(), results.end(), [&](const ParseResult& r) {
    return r.is && p.matches(*r.is);
  });
}

bool allAS(const std::vector<ParseResult>& results, const std::string& as) {
  auto t = parseGroundTerm(as);
  return !results.empty() &&
         std::all_of(results.begin(), results.end(),
                     [&](const ParseResult& r) { return r.as == t; });
}

// Does any Focus slot, at any nesting depth, mention the entity?
bool entityInAnyFocus(const ISNode& node, const std::string& entity);

bool entityInFocusValue(const ISValue& v, const std::string& entity) {
  if (v.isSem()) {
    std::set<std::string> consts;
    v.term().constants(consts);
    return consts.count(entity) > 0;
  }
  if (v.isNested()) return entityInAnyFocus(v.node(), entity);
  return false;
}

bool entityInAnyFocus(const ISNode& node, const std::string& entity) {
  if (entityInFocusValue(node.focus, entity)) return true;
  if (node.topic.isNested() && entityInAnyFocus(node.topic.node(), entity))
    return true;
  for (const auto& g : node.ground) {
    if (g.isNested() && entityInAnyFocus(g.node(), entity)) return true;
  }
  return false;
}

}  // namespace

int main() {
  std::vector<Check> checks;

  checks.push_back({"01 permutation closure (ex. 1)", [](std::ostringstream& problems) {
    const std::vector<std::string> orders = {
        "Fatma Ahmet'i gördü", "Ahmet'i Fatma gördü", "Fatma gördü Ahmet'i",
        "Ahmet'i gördü Fatma", "gördü Ahmet'i Fatma", "gördü Fatma Ahmet'i"};
    for (const auto& order : orders) {
      auto results = run(order, dm({"Fatma", "Ahmet"}));
      EXPECT(!results.empty(), order + ": no complete parse");
      EXPECT(allAS(results, "see(Fatma, Ahmet)"),
             order + ": AS is not exactly see(Fatma, Ahmet)");
    }
  }});

  checks.push_back({"02 topic/focus placement (exx. 2b, 3b)", [](std::ostringstream& problems) {
    auto sov = run("Fatma Ahmet'i gördü");
    EXPECT(existsIS(sov, "topic=Fatma; focus=Ahmet"),
           "SOV: no IS with topic=Fatma, focus=Ahmet");
    auto osv = run("Ahmet'i Fatma gördü");
    EXPECT(existsIS(osv, "topic=Ahmet; focus=Fatma"),
           "OSV: no IS with topic=Ahmet, focus=Fatma");
  }});

  checks.push_back({"03 Figure 1 sentence (ex. 10b)", [](std::ostringstream& problems) {
    auto results = run("bugün küçük Ahmet'i görecek Fatma", dm({"Fatma"}));
    EXPECT(!results.empty(), "no parse");
    EXPECT(existsIS(results, "topic=today; focus=little(Ahmet); ground~see, Fatma"),
           "no IS with topic=today, focus=little(Ahmet), ground {see', Fatma}");
  }});

  checks.push_back({"04 adjunct positions (exx. 4a-c)", [](std::ostringstream& problems) {
    auto a = run("Fatma Ahmet'i dün gördü");
    EXPECT(allAS(a, "yesterday(see(Fatma, Ahmet))"), "4a: wrong AS");
    EXPECT(existsIS(a, "focus=yesterday"), "4a: dün is not a focus");
    auto b = run("dün Fatma Ahmet'i gördü");
    EXPECT(allAS(b, "yesterday(see(Fatma, Ahmet))"), "4b: wrong AS");
    EXPECT(existsIS(b, "topic=yesterday"), "4b: dün is not a topic");
    auto c = run("Fatma Ahmet'i gördü dün");
    EXPECT(allAS(c, "yesterday(see(Fatma, Ahmet))"), "4c: wrong AS");
    EXPECT(existsIS(c, "ground~yesterday"), "4c: dün is not postverbal ground");
  }});

  checks.push_back({"05 verb composition (ex. 16)", [](std::ostringstream& problems) {
    const auto& gerund = lexicon().lookup("gittiğini").at(0)->synsem;
    const auto& matrix = lexicon().lookup("biliyor").at(0)->synsem;
    auto out = backwardCompose(gerund, matrix);
    EXPECT(out.results.size() == 1, "expected exactly one composition result");
    if (out.results.size() == 1) {
      auto expected = parseSynSem("S: know(X, go(Y)) | {Nn:X, Ng:Y}");
      EXPECT(canonicalKey(out.results[0]) == canonicalKey(expected),
             "composed constituent is " + out.results[0].str() +
                 ", expected " + expected.str());
    }
  }});

  checks.push_back({"06 rejection (ex. 17)", [](std::ostringstream& problems) {
    auto results = run("gittiğini Ayşe Fatma'nın biliyor",
                       dm({"Fatma", "Ahmet", "Ayşe"}));
    EXPECT(results.empty(), "starred order received a parse");
  }});

  checks.push_back({"07 nested IS (ex. 14)", [](std::ostringstream& problems) {
    auto results = run("dün Fatma'nın gittiğini Ayşe biliyor");
    EXPECT(!results.empty(), "no parse");
    EXPECT(existsIS(results,
                    "topic=[topic=yesterday; focus=Fatma; ground~go]; "
                    "focus=Ayşe; ground~know"),
           "no IS matching the printed two-level structure");
  }});

  checks.push_back({"08 long-distance scrambling (exx. 15b, 15c)", [](std::ostringstream& problems) {
    auto b = run("Fatma'nın Ayşe dün gittiğini biliyor");
    auto target = parseGroundTerm("know(Ayşe, yesterday(go(Fatma)))");
    EXPECT(std::any_of(b.begin(), b.end(),
                       [&](const ParseResult& r) { return r.as == target; }),
           "15b: AS know(Ayşe, yesterday(go(Fatma))) missing");
    EXPECT(existsIS(b, "topic=Fatma"), "15b: no IS with matrix topic=Fatma");

    auto c = run("Ayşe dün gittiğini Fatma'nın biliyor", dm({"Fatma"}));
    for (const auto& r : c) {
      EXPECT(!entityInAnyFocus(*r.is, "Fatma"),
             "15c: a parse put Fatma in a focus slot: " + r.is->inlineStr());
    }
  }});

  checks.push_back({"09 islands (Figure 3)", [](std::ostringstream& problems) {
    auto ctx = dm({"Berna", "homework", "help", "me"});
    auto a = run("Berna ödevini bitirince bana yardım edecek", ctx);
    EXPECT(!a.empty(), "19a: island lexicon rejects the in-situ clause");
    auto b = run("Berna bitirince bana yardım edecek ödevini", ctx);
    EXPECT(b.empty(), "19b: island lexicon let the object scramble out");

    auto nonIsland =
        Lexicon::fromFile(kData + "/lexicon/turkish_paper_nonisland.lex");
    auto c = parse(tokenize("Berna bitirince bana yardım edecek ödevini"),
                   nonIsland, ctx);
    EXPECT(!c.empty(), "19b: non-island schema still rejects the extraction");
  }});

  checks.push_back({"10 givenness gate (verb-initial orders)", [](std::ostringstream& problems) {
    EXPECT(run("gördü Fatma Ahmet'i").empty(),
           "postverbal new entities were accepted with an empty model");
    auto given = run("gördü Fatma Ahmet'i", dm({"Fatma", "Ahmet"}));
    EXPECT(!given.empty(), "no parse even with both entities evoked");
    EXPECT(std::all_of(given.begin(), given.end(),
                       [](const ParseResult& r) {
                         return r.is->topic.isInferrable();
                       }),
           "expected the inferrable-topic variant");
  }});

  checks.push_back({"11 scrambled NP*-V* stress (m=3)", [](std::ostringstream& problems) {
    auto stress = Lexicon::fromString(
        "np1 := Nn: c1 @ value\n"
        "np2 := Ng: c2 @ value\n"
        "np3 := Nd: c3 @ value\n"
        "v1 := S: p1(X, P) | {Nn:X, S[acc]:P} @ template9\n"
        "v2 := S[acc]: p2(Y, Q) | {Ng:Y, S[abl]:Q} @ template9\n"
        "v3 := S[abl]: p3(Z) | {Nd:Z} @ template9\n",
        "stress.lex");
    auto expected = parseGroundTerm("p1(c1, p2(c2, p3(c3)))");
    std::vector<std::string> nps = {"np1", "np2", "np3"};
    std::sort(nps.begin(), nps.end());
    do {
      std::vector<std::string> tokens = nps;
      tokens.insert(tokens.end(), {"v3", "v2", "v1"});
      std::string shown = tokens[0] + " " + tokens[1] + " " + tokens[2];
      ParseStats stats;
      std::vector<ParseResult> results;
      try {
        results = parse(tokens, stress, {}, {}, &stats);
      } catch (const ChartLimitError&) {
        EXPECT(false, shown + ": chart guard tripped");
        continue;
      }
      EXPECT(!results.empty(), shown + ": no parse");
      EXPECT(std::all_of(results.begin(), results.end(),
                         [&](const ParseResult& r) { return r.as == expected; }),
             shown + ": AS is not the nested p1(c1, p2(c2, p3(c3)))");
      EXPECT(stats.chartItems < ParseOptions{}.maxChartItems,
             shown + ": chart items reached the guard");
    } while (std::next_permutation(nps.begin(), nps.end()));
  }});

  checks.push_back({"12 realizer round trip (corpus)", [](std::ostringstream& problems) {
    auto cases = loadCorpus(kData + "/corpus/paper_corpus.cases");
    for (const auto& c : cases) {
      if (!c.expectAccept) continue;
      std::string original;
      for (const auto& t : c.tokens)
        original += (original.empty() ? "" : " ") + t;
      auto results = parse(c.tokens, lexicon(), c.dm);
      EXPECT(!results.empty(), c.id + ": no parse");
      for (const auto& r : results) {
        RealizationRequest req;
        req.targetAS = r.as;
        req.targetIS = ISPattern::exact(*r.is);
        req.bag = c.tokens;
        req.dm = c.dm;
        auto orders = realize(req, lexicon());
        EXPECT(std::find(orders.begin(), orders.end(), original) != orders.end(),
               c.id + ": realize(" + r.as.str() + ", IS) lost the original order");
        for (const auto& order : orders) {
          auto reparsed = parse(tokenize(order), lexicon(), c.dm);
          bool sound = std::any_of(
              reparsed.begin(), reparsed.end(), [&](const ParseResult& p) {
                return p.as == r.as && p.is &&
                       ISPattern::exact(*r.is).matches(*p.is);
              });
          EXPECT(sound, c.id + ": realized order '" + order +
                            "' does not reparse to a matching analysis");
        }
      }
    }
  }});

  checks.push_back({"13 conjunction-gate ablation", [](std::ostringstream& problems) {
    EXPECT(run("gördü Fatma Ahmet'i").empty(),
           "full parser accepted the dm-empty sentence");
    ParseOptions ablated;
    ablated.orderingEnabled = false;
    auto syntactic = run("gördü Fatma Ahmet'i", {}, ablated);
    EXPECT(!syntactic.empty(),
           "syntax-only chart found no derivation; the rejection was not "
           "the ordering component's doing");
    EXPECT(allAS(syntactic, "see(Fatma, Ahmet)"), "ablated AS wrong");
  }});

  int failures = 0;
  for (auto& check : checks) {
    std::ostringstream problems;
    std::string verdict;
    try {
      check.body(problems);
    } catch (const std::exception& e) {
      problems << "    exception: " << e.what() << "\n";
    }
    bool ok = problems.str().empty();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << check.name << "\n";
    if (!ok) std::cout << problems.str();
  }
  std::cout << (checks.size() - failures) << "/" << checks.size()
            << " acceptance criteria passed\n";
  return failures;
}
