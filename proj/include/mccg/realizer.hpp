#pragma once

#include "mccg/parser.hpp"

namespace mccg {

struct BagTooLargeError : Error {
  using Error::Error;
};

// Word-order generation request: the proposition to express, the IS the
// context calls for (fields may be wildcards), and the word forms to order.
struct RealizationRequest {
  SemTerm targetAS;
  ISPattern targetIS;
  std::vector<std::string> bag;
  DiscourseModel dm;
};

// Enumerate-and-filter realization: every permutation of the bag that
// parses to the requested AS with an IS matching the pattern. Results are
// deduplicated and sorted. Bags above 9 forms are rejected.
std::vector<std::string> realize(const RealizationRequest& request,
                                 const Lexicon& lexicon,
                                 const ParseOptions& opts = {});

}  // namespace mccg
