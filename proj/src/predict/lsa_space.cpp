#include "anchorlink/predict/lsa_space.hpp"

#include "anchorlink/text/tokenizer.hpp"

namespace anchorlink {

LsaSpace::LsaSpace(std::span<const Article> articles, const std::vector<bool>& training,
                   const LsaOptions& options) {
  if (training.size() != articles.size()) throw ArgumentError("training mask size mismatch");
  std::vector<std::vector<std::string>> corpus;
  std::vector<std::vector<std::string>> tokens(articles.size());
  std::vector<std::size_t> row_of(articles.size(), SIZE_MAX);
  for (std::size_t id = 0; id < articles.size(); ++id) {
    tokens[id] = tokenize(articles[id].abstract);
    if (training[id]) {
      row_of[id] = corpus.size();
      corpus.push_back(tokens[id]);
    }
  }
  model_ = fit_lsa(build_tfidf(corpus), options);
  embeddings_.resize(static_cast<Eigen::Index>(articles.size()), model_.dimension());
  for (std::size_t id = 0; id < articles.size(); ++id) {
    const auto row = static_cast<Eigen::Index>(id);
    if (row_of[id] != SIZE_MAX) {
      embeddings_.row(row) = model_.doc_embeddings().row(static_cast<Eigen::Index>(row_of[id]));
    } else {
      embeddings_.row(row) = model_.embed_tokens(tokens[id]).transpose();
    }
  }
}

double score_lsa(const LsaSpace& space, NodeId source, NodeId target) {
  return 0.5 * (1.0 + cosine(space.embedding(source), space.embedding(target)));
}

}  // namespace anchorlink
