#include "mccg/realizer.hpp"

#include <algorithm>

namespace mccg {

std::vector<std::string> realize(const RealizationRequest& request,
                                 const Lexicon& lexicon,
                                 const ParseOptions& opts) {
  if (request.bag.size() > 9)
    throw BagTooLargeError("realization bag has " +
                           std::to_string(request.bag.size()) +
                           " forms; the limit is 9");
  for (const auto& form : request.bag) {
    if (lexicon.lookup(form).empty())
      throw TokenUnknownError("unknown token '" + form + "'");
  }

  std::vector<std::string> order = request.bag;
  std::sort(order.begin(), order.end());
  std::vector<std::string> out;
  do {
    auto results = parse(order, lexicon, request.dm, opts);
    bool hit = std::any_of(results.begin(), results.end(),
                           [&](const ParseResult& r) {
                             return r.as == request.targetAS && r.is &&
                                    request.targetIS.matches(*r.is);
                           });
    if (hit) {
      std::string sentence;
      for (const auto& tok : order) {
        if (!sentence.empty()) sentence += " ";
        sentence += tok;
      }
      out.push_back(std::move(sentence));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  // next_permutation over the sorted bag emits each distinct order once,
  // in lexicographic order.
  return out;
}

}  // namespace mccg
