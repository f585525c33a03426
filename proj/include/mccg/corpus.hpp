#pragma once

#include "mccg/parser.hpp"

namespace mccg {

struct CorpusError : Error {
  using Error::Error;
};

// One regression case: a token sequence, its discourse model, and the
// grammaticality/analysis expectations to check.
struct CorpusCase {
  std::string id;
  std::vector<std::string> tokens;
  DiscourseModel dm;
  bool expectAccept = true;
  std::optional<SemTerm> expectAS;       // some parse has this AS
  std::optional<SemTerm> expectOnlyAS;   // and every parse has this AS
  std::optional<ISPattern> isPattern;    // some parse matches (with AS if set)
  std::optional<int> minParses;
  std::optional<int> maxParses;
};

std::vector<CorpusCase> loadCorpus(const std::string& path);
std::vector<CorpusCase> parseCorpus(const std::string& text,
                                    const std::string& origin = "<string>");

struct CaseOutcome {
  std::string id;
  bool passed = false;
  std::string detail;  // expected vs. actual on failure
};

struct CorpusReport {
  std::vector<CaseOutcome> outcomes;
  std::size_t failures = 0;
};

CorpusReport runCorpus(const std::vector<CorpusCase>& cases,
                       const Lexicon& lexicon, const ParseOptions& opts = {});

}  // namespace mccg
