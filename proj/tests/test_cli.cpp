#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mccg/cli.hpp"
#include "mccg/json_io.hpp"

using namespace mccg;

namespace {

const std::string kData = MCCG_DATA_DIR;
const std::string kLex = kData + "/lexicon/turkish_paper.lex";
const std::string kCorpus = kData + "/corpus/paper_corpus.cases";
const std::string kDm = kData + "/discourse/seen_fatma_ahmet.dm";

struct CliRun {
  int exit;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string writeTemp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

}  // namespace

TEST_CASE("parse: exit codes reflect the outcome") {
  auto ok = cli({"parse", "Ahmet'i Fatma gördü", "--lexicon", kLex});
  CHECK(ok.exit == 0);
  CHECK(ok.out.find("see(Fatma, Ahmet)") != std::string::npos);
  CHECK(ok.out.find("Topic:") != std::string::npos);

  auto rejected =
      cli({"parse", "gittiğini Ayşe Fatma'nın biliyor", "--lexicon", kLex});
  CHECK(rejected.exit == 1);
  CHECK(rejected.out.find("no parse") != std::string::npos);

  auto missing = cli({"parse", "Fatma", "--lexicon", "/nonexistent.lex"});
  CHECK(missing.exit == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  auto unknown = cli({"parse", "Fatma zzz", "--lexicon", kLex});
  CHECK(unknown.exit == 2);
  CHECK(unknown.err.find("unknown token") != std::string::npos);

  auto badUsage = cli({"parse", "--lexicon", kLex});
  CHECK(badUsage.exit == 2);
}

TEST_CASE("parse: --trace prints the derivation") {
  auto traced = cli({"parse", "Ahmet'i Fatma gördü", "--lexicon", kLex,
                     "--trace", "--discourse", kDm});
  CHECK(traced.exit == 0);
  CHECK(traced.out.find("derivation:") != std::string::npos);
  CHECK(traced.out.find("lex") != std::string::npos);
  CHECK(traced.out.find("bwdApply") != std::string::npos);
}

TEST_CASE("parse: JSON output round-trips to the in-memory analyses") {
  auto r = cli({"parse", "dün Fatma'nın gittiğini Ayşe biliyor", "--lexicon",
                kLex, "--format", "json"});
  REQUIRE(r.exit == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["sentence"] == "dün Fatma'nın gittiğini Ayşe biliyor");
  REQUIRE_FALSE(j["parses"].empty());

  auto lexicon = Lexicon::fromFile(kLex);
  auto expected =
      parse(tokenize("dün Fatma'nın gittiğini Ayşe biliyor"), lexicon, {});
  REQUIRE(j["parses"].size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    auto roundTripped = resultFromJson(j["parses"][i]);
    CHECK(roundTripped.as == expected[i].as);
    REQUIRE(roundTripped.is.has_value());
    CHECK(*roundTripped.is == *expected[i].is);
  }
}

TEST_CASE("realize: orders on stdout, one per line") {
  auto r = cli({"realize", "--as", "see(Fatma, Ahmet)", "--topic", "Ahmet",
                "--focus", "Fatma", "--bag", "Fatma Ahmet'i gördü",
                "--lexicon", kLex});
  CHECK(r.exit == 0);
  CHECK(r.out == "Ahmet'i Fatma gördü\n");

  auto none = cli({"realize", "--as", "see(Fatma, Ahmet)", "--topic", "Ahmet",
                   "--focus", "Ahmet", "--bag", "Fatma Ahmet'i gördü",
                   "--lexicon", kLex});
  CHECK(none.exit == 1);
  CHECK(none.out.empty());

  auto malformed = cli({"realize", "--as", "see(Fatma,", "--bag", "Fatma",
                        "--lexicon", kLex});
  CHECK(malformed.exit == 2);
}

TEST_CASE("corpus: the shipped corpus passes") {
  auto r = cli({"corpus", "--corpus", kCorpus, "--lexicon", kLex});
  CHECK(r.exit == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("21/21 cases passed") != std::string::npos);
}

TEST_CASE("corpus: failures are reported per case and set the exit code") {
  auto path = writeTemp("mccg_wrong.cases",
                        "case wrong-judgment\n"
                        "  tokens Ahmet'i Fatma gördü\n"
                        "  expect reject\n"
                        "end\n"
                        "case fine\n"
                        "  tokens Ahmet'i Fatma gördü\n"
                        "  expect accept\n"
                        "end\n");
  auto r = cli({"corpus", "--corpus", path, "--lexicon", kLex});
  CHECK(r.exit == 1);
  CHECK(r.out.find("FAIL wrong-judgment") != std::string::npos);
  CHECK(r.out.find("ok   fine") != std::string::npos);
  CHECK(r.out.find("1/2 cases passed") != std::string::npos);

  auto junit =
      cli({"corpus", "--corpus", path, "--lexicon", kLex, "--report", "junit"});
  CHECK(junit.exit == 1);
  CHECK(junit.out.find("<testsuite name=\"corpus\" tests=\"2\" failures=\"1\">") !=
        std::string::npos);
  CHECK(junit.out.find("<failure message=") != std::string::npos);
}

TEST_CASE("corpus: empty and malformed corpora") {
  auto empty = writeTemp("mccg_empty.cases", "# nothing here\n");
  auto r = cli({"corpus", "--corpus", empty, "--lexicon", kLex});
  CHECK(r.exit == 0);
  CHECK(r.out.find("0/0 cases passed") != std::string::npos);

  auto malformed = writeTemp("mccg_malformed.cases", "tokens out of place\n");
  auto bad = cli({"corpus", "--corpus", malformed, "--lexicon", kLex});
  CHECK(bad.exit == 2);
  CHECK(bad.err.find("outside a case block") != std::string::npos);

  auto dupIds = writeTemp("mccg_dup.cases",
                          "case a\n  tokens Fatma\n  expect reject\nend\n"
                          "case a\n  tokens Fatma\n  expect reject\nend\n");
  CHECK(cli({"corpus", "--corpus", dupIds, "--lexicon", kLex}).exit == 2);
}

TEST_CASE("help and unknown subcommands") {
  CHECK(cli({"--help"}).exit == 0);
  CHECK(cli({"frobnicate"}).exit == 2);
  CHECK(cli({}).exit == 2);
}
