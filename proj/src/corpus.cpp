#include "mccg/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mccg {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CorpusCase> loadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parseCorpus(buf.str(), path);
}

std::vector<CorpusCase> parseCorpus(const std::string& text,
                                    const std::string& origin) {
  std::vector<CorpusCase> cases;
  std::set<std::string> ids;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;

  std::optional<CorpusCase> current;
  std::optional<ISPattern> pattern;

  auto fail = [&](const std::string& msg) {
    throw CorpusError(origin + ":" + std::to_string(lineNo) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineNo;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    std::istringstream ls(t);
    std::string key;
    ls >> key;
    std::string rest = trim(t.substr(key.size()));

    if (key == "case") {
      if (current) fail("unterminated case '" + current->id + "'");
      if (rest.empty()) fail("case needs an id");
      if (!ids.insert(rest).second) fail("duplicate case id '" + rest + "'");
      current = CorpusCase{};
      current->id = rest;
      pattern.reset();
      continue;
    }
    if (!current) fail("'" + key + "' outside a case block");

    if (key == "end") {
      if (current->tokens.empty()) fail("case '" + current->id + "' has no tokens");
      if (pattern) current->isPattern = *pattern;
      cases.push_back(std::move(*current));
      current.reset();
    } else if (key == "tokens") {
      std::istringstream ts(rest);
      std::string tok;
      while (ts >> tok) current->tokens.push_back(tok);
    } else if (key == "dm") {
      std::istringstream ts(rest);
      std::string tok;
      while (ts >> tok) current->dm.entities.insert(tok);
    } else if (key == "expect") {
      if (rest == "accept") current->expectAccept = true;
      else if (rest == "reject") current->expectAccept = false;
      else fail("expect must be accept or reject");
    } else if (key == "as") {
      current->expectAS = parseGroundTerm(rest);
    } else if (key == "as-only") {
      current->expectOnlyAS = parseGroundTerm(rest);
    } else if (key == "topic" || key == "focus" || key == "ground") {
      if (!pattern) pattern = ISPattern{};
      try {
        if (key == "topic") pattern->topic = ISValuePattern::parse(rest);
        else if (key == "focus") pattern->focus = ISValuePattern::parse(rest);
        else {
          std::string spec = rest;
          ISPattern::GroundMode mode = ISPattern::GroundMode::Contains;
          if (!spec.empty() && (spec[0] == '~' || spec[0] == '=')) {
            mode = spec[0] == '=' ? ISPattern::GroundMode::Exact
                                  : ISPattern::GroundMode::Contains;
            spec = trim(spec.substr(1));
          }
          pattern->groundMode = mode;
          for (const auto& item : splitTopLevel(spec, ','))
            pattern->ground.push_back(ISValuePattern::parse(item));
        }
      } catch (const Error& e) {
        fail(e.what());
      }
    } else if (key == "parses") {
      std::istringstream ts(rest);
      std::string word;
      while (ts >> word) {
        int value = 0;
        if (word == "min" && ts >> value) current->minParses = value;
        else if (word == "max" && ts >> value) current->maxParses = value;
        else fail("parses takes 'min N' and/or 'max N'");
      }
    } else {
      fail("unknown corpus key '" + key + "'");
    }
  }
  if (current) fail("unterminated case '" + current->id + "'");
  return cases;
}

CorpusReport runCorpus(const std::vector<CorpusCase>& cases,
                       const Lexicon& lexicon, const ParseOptions& opts) {
  CorpusReport report;
  for (const auto& c : cases) {
    CaseOutcome outcome;
    outcome.id = c.id;
    std::vector<ParseResult> results;
    try {
      results = parse(c.tokens, lexicon, c.dm, opts);
    } catch (const Error& e) {
      outcome.passed = false;
      outcome.detail = e.what();
      ++report.failures;
      report.outcomes.push_back(std::move(outcome));
      continue;
    }

    std::vector<std::string> problems;
    if (!c.expectAccept) {
      if (!results.empty())
        problems.push_back("expected rejection, got " +
                           std::to_string(results.size()) + " parse(s)");
    } else {
      if (results.empty()) problems.push_back("expected acceptance, got none");
      if (c.expectAS &&
          std::none_of(results.begin(), results.end(),
                       [&](const ParseResult& r) { return r.as == *c.expectAS; }))
        problems.push_back("no parse has AS " + c.expectAS->str());
      if (c.expectOnlyAS) {
        for (const auto& r : results) {
          if (r.as != *c.expectOnlyAS) {
            problems.push_back("unexpected AS " + r.as.str());
            break;
          }
        }
      }
      if (c.isPattern) {
        bool hit = std::any_of(
            results.begin(), results.end(), [&](const ParseResult& r) {
              if (c.expectAS && r.as != *c.expectAS) return false;
              return r.is && c.isPattern->matches(*r.is);
            });
        if (!hit) problems.push_back("no parse matches the IS pattern");
      }
      if (c.minParses && static_cast<int>(results.size()) < *c.minParses)
        problems.push_back("expected at least " + std::to_string(*c.minParses) +
                           " parse(s), got " + std::to_string(results.size()));
      if (c.maxParses && static_cast<int>(results.size()) > *c.maxParses)
        problems.push_back("expected at most " + std::to_string(*c.maxParses) +
                           " parse(s), got " + std::to_string(results.size()));
    }

    outcome.passed = problems.empty();
    if (!outcome.passed) {
      std::string all;
      for (const auto& p : problems) {
        if (!all.empty()) all += "; ";
        all += p;
      }
      outcome.detail = all;
      ++report.failures;
    }
    report.outcomes.push_back(std::move(outcome));
  }
  // Reported by id, independent of execution order.
  std::sort(report.outcomes.begin(), report.outcomes.end(),
            [](const CaseOutcome& a, const CaseOutcome& b) { return a.id < b.id; });
  return report;
}

}  // namespace mccg
