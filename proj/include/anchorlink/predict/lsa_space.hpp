#pragma once

#include <span>
#include <vector>

#include "anchorlink/article.hpp"
#include "anchorlink/text/lsa.hpp"

namespace anchorlink {

/// An LSA model fitted on the training documents plus an embedding for every
/// article. Training articles use their own rows; held-out articles are
/// folded in from their text only.
class LsaSpace {
 public:
  /// `training[id]` selects the documents the model is fitted on.
  LsaSpace(std::span<const Article> articles, const std::vector<bool>& training,
           const LsaOptions& options);

  const LsaModel& model() const { return model_; }

  std::span<const double> embedding(NodeId id) const {
    return {embeddings_.row(id).data(), static_cast<std::size_t>(embeddings_.cols())};
  }

 private:
  LsaModel model_;
  RowMatrix embeddings_;
};

/// (1 + cosine) / 2 between the two document embeddings.
double score_lsa(const LsaSpace& space, NodeId source, NodeId target);

}  // namespace anchorlink
