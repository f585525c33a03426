#include "mccg/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "mccg/corpus.hpp"
#include "mccg/json_io.hpp"
#include "mccg/realizer.hpp"

namespace mccg {

namespace {

struct CommonOpts {
  std::string lexiconPath;
  std::string discoursePath;
  std::size_t maxItems = 100000;

  Lexicon lexicon() const { return Lexicon::fromFile(lexiconPath); }
  DiscourseModel discourse() const {
    return discoursePath.empty() ? DiscourseModel{}
                                 : DiscourseModel::fromFile(discoursePath);
  }
  ParseOptions parseOptions() const {
    ParseOptions opts;
    opts.maxChartItems = maxItems;
    return opts;
  }
};

void addCommon(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--lexicon", common.lexiconPath, "Lexicon file")->required();
  cmd->add_option("--discourse", common.discoursePath,
                  "Discourse model file (one evoked entity per line)");
  cmd->add_option("--max-items", common.maxItems, "Chart item limit");
}

int cmdParse(const std::string& sentence, const CommonOpts& common,
             const std::string& format, bool trace, std::ostream& out) {
  auto lexicon = common.lexicon();
  auto dm = common.discourse();
  auto results = parse(tokenize(sentence), lexicon, dm, common.parseOptions());

  if (format == "json") {
    nlohmann::json j{{"sentence", sentence},
                     {"parses", nlohmann::json::array()}};
    for (const auto& r : results) j["parses"].push_back(resultToJson(r));
    out << j.dump(2) << "\n";
  } else {
    if (results.empty()) {
      out << "no parse\n";
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      out << "parse " << (i + 1) << ":\n";
      out << "  AS: " << r.as.str() << "\n";
      out << "  IS:\n" << (r.is ? r.is->str(4) : "    (none)\n");
      if (trace && r.trace) out << "  derivation:\n" << r.trace->str(4);
    }
  }
  return results.empty() ? 1 : 0;
}

int cmdRealize(const std::string& asText, const std::string& topic,
               const std::string& focus, const std::string& ground,
               const std::string& bagText, const CommonOpts& common,
               std::ostream& out) {
  RealizationRequest request;
  request.targetAS = parseGroundTerm(asText);
  request.targetIS.topic = ISValuePattern::parse(topic);
  request.targetIS.focus = ISValuePattern::parse(focus);
  if (ground != "*") {
    request.targetIS.groundMode = ISPattern::GroundMode::Contains;
    for (const auto& item : splitTopLevel(ground, ','))
      request.targetIS.ground.push_back(ISValuePattern::parse(item));
  }
  request.bag = tokenize(bagText);
  request.dm = common.discourse();

  auto lexicon = common.lexicon();
  auto orders = realize(request, lexicon, common.parseOptions());
  for (const auto& o : orders) out << o << "\n";
  return orders.empty() ? 1 : 0;
}

std::string xmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

int cmdCorpus(const std::string& corpusPath, const CommonOpts& common,
              const std::string& reportStyle, std::ostream& out) {
  auto cases = loadCorpus(corpusPath);
  auto lexicon = common.lexicon();
  auto report = runCorpus(cases, lexicon, common.parseOptions());

  if (reportStyle == "junit") {
    out << "<testsuite name=\"corpus\" tests=\"" << report.outcomes.size()
        << "\" failures=\"" << report.failures << "\">\n";
    for (const auto& o : report.outcomes) {
      if (o.passed) {
        out << "  <testcase name=\"" << xmlEscape(o.id) << "\"/>\n";
      } else {
        out << "  <testcase name=\"" << xmlEscape(o.id) << "\">\n"
            << "    <failure message=\"" << xmlEscape(o.detail) << "\"/>\n"
            << "  </testcase>\n";
      }
    }
    out << "</testsuite>\n";
  } else {
    for (const auto& o : report.outcomes) {
      if (o.passed) out << "ok   " << o.id << "\n";
      else out << "FAIL " << o.id << " -- " << o.detail << "\n";
    }
    out << (report.outcomes.size() - report.failures) << "/"
        << report.outcomes.size() << " cases passed\n";
  }
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Multiset-CCG parser, realizer, and corpus runner"};
  app.require_subcommand(1);

  std::string sentence, format = "text", asText, topic = "*", focus = "*",
                        ground = "*", bagText, corpusPath, reportStyle = "summary";
  bool trace = false;
  CommonOpts parseCommon, realizeCommon, corpusCommon;

  CLI::App* parseCmd =
      app.add_subcommand("parse", "Parse a sentence into (AS, IS) analyses");
  parseCmd->add_option("sentence", sentence, "Whitespace-separated tokens")
      ->required();
  addCommon(parseCmd, parseCommon);
  parseCmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  parseCmd->add_flag("--trace", trace, "Print derivation trees");

  CLI::App* realizeCmd = app.add_subcommand(
      "realize", "Generate word orders for an AS in a given context");
  realizeCmd->add_option("--as", asText, "Target predicate-argument structure")
      ->required();
  realizeCmd->add_option("--topic", topic, "Topic pattern or *");
  realizeCmd->add_option("--focus", focus, "Focus pattern or *");
  realizeCmd->add_option("--ground", ground,
                         "Comma-separated ground members or *");
  realizeCmd->add_option("--bag", bagText, "Word forms to order")->required();
  addCommon(realizeCmd, realizeCommon);

  CLI::App* corpusCmd =
      app.add_subcommand("corpus", "Run a regression corpus");
  corpusCmd->add_option("--corpus", corpusPath, "Corpus file")->required();
  addCommon(corpusCmd, corpusCommon);
  corpusCmd->add_option("--report", reportStyle, "summary or junit")
      ->check(CLI::IsMember({"summary", "junit"}));

  std::vector<const char*> argv;
  argv.push_back("mccg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parseCmd->parsed())
      return cmdParse(sentence, parseCommon, format, trace, out);
    if (realizeCmd->parsed())
      return cmdRealize(asText, topic, focus, ground, bagText, realizeCommon,
                        out);
    if (corpusCmd->parsed())
      return cmdCorpus(corpusPath, corpusCommon, reportStyle, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mccg
