#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

namespace anchorlink {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Token -> column index. Indices follow lexicographic token order so that a
/// corpus always yields the same numbering.
class Vocabulary {
 public:
  static Vocabulary build(const std::vector<std::vector<std::string>>& corpus);

  std::size_t size() const { return tokens_.size(); }
  std::size_t corpus_size() const { return corpus_size_; }
  std::optional<std::size_t> index(std::string_view token) const;
  const std::string& token(std::size_t index) const { return tokens_[index]; }
  std::size_t document_frequency(std::size_t index) const { return document_frequency_[index]; }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::size_t> document_frequency_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t corpus_size_ = 0;
};

/// Raw term counts weighted by idf = ln(N / df).
struct TfidfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;

  /// Sparse TF-IDF vector (column, weight), ascending by column, zero
  /// weights omitted. Unknown tokens are ignored.
  std::vector<std::pair<std::size_t, double>> vectorize(const std::vector<std::string>& tokens) const;
};

struct TfidfMatrix {
  TfidfModel model;
  SparseMatrix matrix;  // documents x vocabulary
};

/// Throws ArgumentError when the corpus is empty or has no tokens at all.
TfidfMatrix build_tfidf(const std::vector<std::vector<std::string>>& corpus);

}  // namespace anchorlink
