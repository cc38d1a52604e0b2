#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "anchorlink/text/tfidf.hpp"

namespace anchorlink {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class SvdPath { kAuto, kExact, kRandomized };

struct SvdOptions {
  std::uint64_t seed = 0;
  int power_iterations = 2;
  int oversampling = 10;
  /// Matrices with at most this many cells take the dense exact path.
  std::size_t exact_max_cells = 4'000'000;
  SvdPath path = SvdPath::kAuto;
};

/// Rank-d factors A ~ U diag(S) V^T. Columns beyond the rank of A are zero.
/// Each singular pair is signed so the largest-magnitude entry of its right
/// vector is positive.
struct TruncatedSvd {
  Eigen::MatrixXd u;  // rows x d
  Eigen::VectorXd s;  // d, descending
  RowMatrix v;        // cols x d
  SvdPath path_used = SvdPath::kExact;
};

/// Truncated SVD: dense divide-and-conquer SVD for small matrices, otherwise
/// randomized subspace iteration (Gaussian test matrix, QR
/// re-orthonormalization between power iterations).
TruncatedSvd truncated_svd(const SparseMatrix& matrix, int dimension, const SvdOptions& options = {});

struct LsaOptions {
  int dimension = 512;
  SvdOptions svd;
};

/// Latent semantic analysis space. Text folds in as q V where q is its
/// TF-IDF vector; document embeddings are the fold-ins of the training rows
/// (A V, which equals U diag(S) on the exact path).
class LsaModel {
 public:
  int dimension() const { return static_cast<int>(projection_.cols()); }
  const TfidfModel& tfidf() const { return tfidf_; }
  const RowMatrix& projection() const { return projection_; }
  const Eigen::VectorXd& singular_values() const { return singular_values_; }
  const RowMatrix& doc_embeddings() const { return doc_embeddings_; }
  SvdPath svd_path() const { return svd_path_; }

  std::span<const double> doc_embedding(std::size_t row) const {
    return {doc_embeddings_.row(static_cast<Eigen::Index>(row)).data(),
            static_cast<std::size_t>(doc_embeddings_.cols())};
  }

  Eigen::VectorXd embed_text(std::string_view text) const;
  Eigen::VectorXd embed_tokens(const std::vector<std::string>& tokens) const;

 private:
  friend LsaModel fit_lsa(const TfidfMatrix& tfidf, const LsaOptions& options);

  TfidfModel tfidf_;
  RowMatrix projection_;
  Eigen::VectorXd singular_values_;
  RowMatrix doc_embeddings_;
  SvdPath svd_path_ = SvdPath::kExact;
};

/// Throws ArgumentError when dimension < 1.
LsaModel fit_lsa(const TfidfMatrix& tfidf, const LsaOptions& options = {});

/// u.v / (|u| |v|); 0 when either vector is zero.
double cosine(std::span<const double> u, std::span<const double> v);

inline double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return cosine(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())),
                std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
}

}  // namespace anchorlink
