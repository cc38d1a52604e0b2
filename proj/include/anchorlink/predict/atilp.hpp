#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "anchorlink/anchors/anchor_map.hpp"
#include "anchorlink/predict/lsa_space.hpp"

namespace anchorlink {

/// Cosines between the anchor text (at), source (ds) and target (dt)
/// embeddings: s1 = cos(at, ds), s2 = cos(at, dt), s3 = cos(ds, dt).
struct AtilpScores {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
};

/// One score triple per distinct matched string of the pair.
std::vector<AtilpScores> compute_atilp_scores(const LsaSpace& space, const CandidatePair& pair);

/// Ordinary least squares y ~ X c + b with an intercept. Rank-deficient
/// designs get the minimum-norm solution.
struct OlsFit {
  std::vector<double> coefficients;
  double intercept = 0.0;
};

OlsFit fit_ols(std::span<const std::vector<double>> rows, std::span<const double> targets);

struct AtilpOptions {
  std::size_t positives = 1000;
  std::size_t negatives = 1000;
  std::uint64_t seed = 0;
};

struct AtilpModel {
  std::array<double, 3> coefficients{};  // c_s1, c_s2, c_s3
  double intercept = 0.0;
  std::size_t positives_used = 0;
  std::size_t negatives_used = 0;
  /// Requested minus available samples when a class ran short.
  std::size_t positive_shortfall = 0;
  std::size_t negative_shortfall = 0;

  double predict(const AtilpScores& s) const {
    return intercept + coefficients[0] * s.s1 + coefficients[1] * s.s2 + coefficients[2] * s.s3;
  }
};

/// Samples existing and non-existing training links among the anchor
/// candidates of training documents and regresses the 0/1 label on
/// (s1, s2, s3). A pair with several matched strings contributes the triple
/// whose anchor is most similar to the target (largest s2).
/// Throws Error when either class has no sample.
AtilpModel fit_atilp(const DocumentNetwork& train_network, const LsaSpace& space,
                     const CandidateIndex& anchor_candidates, const AtilpOptions& options = {});

/// Largest linear prediction over the pair's matched strings, clamped to
/// [0, 1]. A null pair (not an anchor candidate) scores 0.
double score_atilp(const AtilpModel& model, const LsaSpace& space, const CandidatePair* pair);

}  // namespace anchorlink
