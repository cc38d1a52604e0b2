#pragma once

#include <span>
#include <vector>

#include "anchorlink/common.hpp"

namespace anchorlink {

struct ScoredPair {
  NodeId source = 0;
  NodeId target = 0;
  double score = 0.0;
  bool label = false;
};

/// Orders pairs by descending score; equal scores fall back to ascending
/// (source, target). Throws ArgumentError on a NaN score.
std::vector<ScoredPair> rank_pairs(std::span<const ScoredPair> pairs);

/// Average precision (area under the precision-recall curve), in percent.
/// Throws UndefinedMetricError when no pair is positive.
double pr_auc(std::span<const ScoredPair> pairs);

/// Same estimator on parallel arrays; ties keep input order.
double pr_auc(std::span<const double> scores, std::span<const int> labels);

struct PrecisionRecall {
  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
};

/// Scored predictors: the top-k pairs are predicted positive where k is the
/// number of positives, so precision equals recall. Binary predictors
/// (scores exactly 0 or 1) are not thresholded: every pair scored 1 is a
/// predicted positive.
PrecisionRecall precision_recall_at_prevalence(std::span<const ScoredPair> pairs, bool binary = false);

PrecisionRecall precision_recall_at_prevalence(std::span<const double> scores,
                                               std::span<const int> labels, bool binary = false);

}  // namespace anchorlink
