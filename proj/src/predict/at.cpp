#include "anchorlink/predict/at.hpp"

#include <algorithm>

namespace anchorlink {

bool predict_at(const AnchorMap& map, const Article& source, NodeId target, std::size_t article_count) {
  if (target >= article_count) {
    throw ArgumentError("unknown target article " + std::to_string(target));
  }
  const auto candidates = scan_candidates(map, source);
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const CandidatePair& pair) { return pair.target == target; });
}

}  // namespace anchorlink
