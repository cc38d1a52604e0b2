#include "anchorlink/text/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "anchorlink/common.hpp"

namespace anchorlink {

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& corpus) {
  std::map<std::string, std::size_t> frequency;
  for (const auto& document : corpus) {
    std::vector<std::string_view> distinct(document.begin(), document.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto token : distinct) ++frequency[std::string(token)];
  }
  Vocabulary vocabulary;
  vocabulary.corpus_size_ = corpus.size();
  vocabulary.tokens_.reserve(frequency.size());
  for (auto& [token, df] : frequency) {
    vocabulary.index_.emplace(token, vocabulary.tokens_.size());
    vocabulary.tokens_.push_back(token);
    vocabulary.document_frequency_.push_back(df);
  }
  return vocabulary;
}

std::optional<std::size_t> Vocabulary::index(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, double>> TfidfModel::vectorize(
    const std::vector<std::string>& tokens) const {
  std::map<std::size_t, double> counts;
  for (const auto& token : tokens) {
    if (const auto column = vocabulary.index(token)) counts[*column] += 1.0;
  }
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(counts.size());
  for (const auto& [column, count] : counts) {
    const double weight = count * idf[column];
    if (weight != 0.0) out.emplace_back(column, weight);
  }
  return out;
}

TfidfMatrix build_tfidf(const std::vector<std::vector<std::string>>& corpus) {
  if (corpus.empty()) throw ArgumentError("TF-IDF needs a non-empty corpus");
  TfidfMatrix result;
  result.model.vocabulary = Vocabulary::build(corpus);
  const auto& vocabulary = result.model.vocabulary;
  if (vocabulary.size() == 0) throw ArgumentError("TF-IDF corpus contains no tokens");

  const double n = static_cast<double>(corpus.size());
  result.model.idf.resize(vocabulary.size());
  for (std::size_t t = 0; t < vocabulary.size(); ++t) {
    result.model.idf[t] = std::log(n / static_cast<double>(vocabulary.document_frequency(t)));
  }

  std::vector<Eigen::Triplet<double>> cells;
  for (std::size_t row = 0; row < corpus.size(); ++row) {
    for (const auto& [column, weight] : result.model.vectorize(corpus[row])) {
      cells.emplace_back(static_cast<int>(row), static_cast<int>(column), weight);
    }
  }
  result.matrix.resize(static_cast<Eigen::Index>(corpus.size()),
                       static_cast<Eigen::Index>(vocabulary.size()));
  result.matrix.setFromTriplets(cells.begin(), cells.end());
  result.matrix.makeCompressed();
  return result;
}

}  // namespace anchorlink
