#include "anchorlink/text/lsa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anchorlink/common.hpp"
#include "anchorlink/rng.hpp"
#include "anchorlink/simd/kernels.hpp"
#include "anchorlink/text/tokenizer.hpp"

namespace anchorlink {
namespace {

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(columns);
  return qr.householderQ() * Eigen::MatrixXd::Identity(columns.rows(), columns.cols());
}

void fix_signs(TruncatedSvd& svd) {
  for (Eigen::Index j = 0; j < svd.v.cols(); ++j) {
    Eigen::Index pivot = 0;
    svd.v.col(j).cwiseAbs().maxCoeff(&pivot);
    if (svd.v(pivot, j) < 0.0) {
      svd.v.col(j) *= -1.0;
      svd.u.col(j) *= -1.0;
    }
  }
}

/// Copies the leading `dimension` singular triplets into `out`. Triplets
/// beyond the numerical rank are left as zeros.
void take_leading(const Eigen::MatrixXd& u, const Eigen::VectorXd& s, const Eigen::MatrixXd& v,
                  int dimension, TruncatedSvd& out) {
  Eigen::Index keep = std::min<Eigen::Index>(dimension, s.size());
  const double tolerance = s.size() == 0 ? 0.0
                                         : s(0) * static_cast<double>(std::max(u.rows(), v.rows())) *
                                               std::numeric_limits<double>::epsilon();
  while (keep > 0 && !(s(keep - 1) > tolerance)) --keep;
  out.u = Eigen::MatrixXd::Zero(u.rows(), dimension);
  out.s = Eigen::VectorXd::Zero(dimension);
  out.v = RowMatrix::Zero(v.rows(), dimension);
  out.u.leftCols(keep) = u.leftCols(keep);
  out.s.head(keep) = s.head(keep);
  out.v.leftCols(keep) = v.leftCols(keep);
}

}  // namespace

TruncatedSvd truncated_svd(const SparseMatrix& matrix, int dimension, const SvdOptions& options) {
  if (dimension < 1) throw ArgumentError("SVD dimension must be at least 1");
  const Eigen::Index rows = matrix.rows();
  const Eigen::Index cols = matrix.cols();
  const Eigen::Index sketch = dimension + options.oversampling;
  const auto cells = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);

  SvdPath path = options.path;
  if (path == SvdPath::kAuto) {
    path = cells <= options.exact_max_cells ? SvdPath::kExact : SvdPath::kRandomized;
  }
  if (sketch >= std::min(rows, cols)) path = SvdPath::kExact;

  TruncatedSvd out;
  out.path_used = path;
  if (path == SvdPath::kExact) {
    const Eigen::MatrixXd dense(matrix);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
    take_leading(svd.matrixU(), svd.singularValues(), svd.matrixV(), dimension, out);
  } else {
    Rng rng(options.seed);
    Eigen::MatrixXd omega(cols, sketch);
    for (Eigen::Index j = 0; j < sketch; ++j) {
      for (Eigen::Index i = 0; i < cols; ++i) omega(i, j) = rng.normal();
    }
    Eigen::MatrixXd q = orthonormal_basis(matrix * omega);
    for (int iter = 0; iter < options.power_iterations; ++iter) {
      const Eigen::MatrixXd z = orthonormal_basis(matrix.transpose() * q);
      q = orthonormal_basis(matrix * z);
    }
    const Eigen::MatrixXd bt = matrix.transpose() * q;  // cols x sketch, equals B^T
    Eigen::BDCSVD<Eigen::MatrixXd> svd(bt, Eigen::ComputeThinU | Eigen::ComputeThinV);
    // B^T = Ub S Vb^T  =>  B = Vb S Ub^T, so A ~ (Q Vb) S Ub^T.
    take_leading(q * svd.matrixV(), svd.singularValues(), svd.matrixU(), dimension, out);
  }
  fix_signs(out);
  return out;
}

LsaModel fit_lsa(const TfidfMatrix& tfidf, const LsaOptions& options) {
  if (options.dimension < 1) throw ArgumentError("LSA dimension must be at least 1");
  TruncatedSvd svd = truncated_svd(tfidf.matrix, options.dimension, options.svd);
  LsaModel model;
  model.tfidf_ = tfidf.model;
  model.projection_ = std::move(svd.v);
  model.singular_values_ = std::move(svd.s);
  model.svd_path_ = svd.path_used;
  model.doc_embeddings_ = tfidf.matrix * model.projection_;
  return model;
}

Eigen::VectorXd LsaModel::embed_tokens(const std::vector<std::string>& tokens) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(projection_.cols());
  const auto d = static_cast<std::size_t>(projection_.cols());
  std::span<double> target(out.data(), d);
  for (const auto& [column, weight] : tfidf_.vectorize(tokens)) {
    const double* row = projection_.row(static_cast<Eigen::Index>(column)).data();
    simd::axpy(weight, std::span<const double>(row, d), target);
  }
  return out;
}

Eigen::VectorXd LsaModel::embed_text(std::string_view text) const {
  return embed_tokens(tokenize(text));
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw ArgumentError("cosine of vectors with different sizes");
  const double uu = simd::squared_norm(u);
  const double vv = simd::squared_norm(v);
  if (uu == 0.0 || vv == 0.0) return 0.0;
  const double c = simd::dot(u, v) / std::sqrt(uu * vv);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace anchorlink
