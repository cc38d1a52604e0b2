#include "anchorlink/predict/atilp.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/Dense>

#include "anchorlink/rng.hpp"

namespace anchorlink {

std::vector<AtilpScores> compute_atilp_scores(const LsaSpace& space, const CandidatePair& pair) {
  const auto source = space.embedding(pair.source);
  const auto target = space.embedding(pair.target);
  const double s3 = cosine(source, target);
  std::vector<AtilpScores> out;
  for (const auto& text : matched_strings(pair)) {
    const Eigen::VectorXd anchor = space.model().embed_text(text);
    const std::span<const double> at(anchor.data(), static_cast<std::size_t>(anchor.size()));
    out.push_back(AtilpScores{cosine(at, source), cosine(at, target), s3});
  }
  return out;
}

OlsFit fit_ols(std::span<const std::vector<double>> rows, std::span<const double> targets) {
  if (rows.size() != targets.size()) throw ArgumentError("OLS rows and targets differ in length");
  if (rows.empty()) throw ArgumentError("OLS needs at least one sample");
  const auto features = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd design(static_cast<Eigen::Index>(rows.size()), features + 1);
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != features) {
      throw ArgumentError("OLS rows have inconsistent widths");
    }
    const auto r = static_cast<Eigen::Index>(i);
    for (Eigen::Index j = 0; j < features; ++j) design(r, j) = rows[i][static_cast<std::size_t>(j)];
    design(r, features) = 1.0;
    y(r) = targets[i];
  }
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
  const Eigen::VectorXd solution = cod.solve(y);
  OlsFit fit;
  fit.coefficients.assign(solution.data(), solution.data() + features);
  fit.intercept = solution(features);
  return fit;
}

AtilpModel fit_atilp(const DocumentNetwork& train_network, const LsaSpace& space,
                     const CandidateIndex& anchor_candidates, const AtilpOptions& options) {
  std::vector<const CandidatePair*> positives;
  std::vector<const CandidatePair*> negatives;
  for (NodeId s = 0; s < anchor_candidates.size(); ++s) {
    if (!train_network.contains(s)) continue;
    for (const auto& pair : anchor_candidates.of(s)) {
      if (!train_network.contains(pair.target)) continue;
      (train_network.has_edge(s, pair.target) ? positives : negatives).push_back(&pair);
    }
  }
  if (positives.empty() || negatives.empty()) {
    throw Error("ATILP needs both linked and unlinked anchor candidates in the training network");
  }

  Rng rng(options.seed);
  AtilpModel model;
  model.positives_used = std::min(options.positives, positives.size());
  model.negatives_used = std::min(options.negatives, negatives.size());
  model.positive_shortfall = options.positives - model.positives_used;
  model.negative_shortfall = options.negatives - model.negatives_used;
  rng.shuffle_prefix(std::span<const CandidatePair*>(positives), model.positives_used);
  rng.shuffle_prefix(std::span<const CandidatePair*>(negatives), model.negatives_used);

  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  auto add = [&](const CandidatePair& pair, double label) {
    const auto triples = compute_atilp_scores(space, pair);
    const auto best = std::max_element(triples.begin(), triples.end(),
                                       [](const AtilpScores& a, const AtilpScores& b) { return a.s2 < b.s2; });
    rows.push_back({best->s1, best->s2, best->s3});
    labels.push_back(label);
  };
  for (std::size_t i = 0; i < model.positives_used; ++i) add(*positives[i], 1.0);
  for (std::size_t i = 0; i < model.negatives_used; ++i) add(*negatives[i], 0.0);

  const OlsFit fit = fit_ols(rows, labels);
  std::copy(fit.coefficients.begin(), fit.coefficients.end(), model.coefficients.begin());
  model.intercept = fit.intercept;
  return model;
}

double score_atilp(const AtilpModel& model, const LsaSpace& space, const CandidatePair* pair) {
  if (pair == nullptr || pair->matched.empty()) return 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : compute_atilp_scores(space, *pair)) best = std::max(best, model.predict(s));
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace anchorlink
