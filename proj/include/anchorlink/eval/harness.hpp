#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anchorlink/dataset.hpp"
#include "anchorlink/eval/splits.hpp"
#include "anchorlink/predict/predictor.hpp"
#include "anchorlink/text/lsa.hpp"

namespace anchorlink {

/// A built-in method, or an external one when `predictions` is set.
struct MethodSpec {
  std::string name;
  std::optional<std::string> predictions;
  bool binary = false;
};

struct HarnessOptions {
  int runs = 5;
  std::uint64_t base_seed = 0;
  double transductive_ratio = 0.10;
  double inductive_ratio = 0.10;
  std::vector<EvalMode> modes{EvalMode::kInductive, EvalMode::kTransductive};
  LsaOptions lsa;
  PredictorOptions predictors;
  /// When set, split files and per-method predictions are written under
  /// <artifacts_dir>/splits/run_<i>/<mode>/.
  std::optional<std::filesystem::path> artifacts_dir;
  std::string dataset_name = "dataset";
};

struct RunMetrics {
  double auc = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

enum class MethodStatus { kOk, kUnsupported, kFailed };

struct Summary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single run
};

Summary summarize(std::span<const double> values);

struct MethodResult {
  std::string dataset;
  EvalMode mode = EvalMode::kTransductive;
  std::string method;
  MethodStatus status = MethodStatus::kOk;
  std::string error;
  std::vector<RunMetrics> per_run;
  Summary auc;
  Summary precision;
  Summary recall;
  std::string split_hash;
};

struct MetricsReport {
  std::vector<MethodResult> results;

  bool has_failures() const;
  const MethodResult* find(EvalMode mode, std::string_view method) const;
};

/// Run i builds both splits with seed base_seed + i; every method scores the
/// identical test pairs. A method failing on a mode it supports is flagged
/// and skipped for the remaining runs of that mode.
MetricsReport run_eval(const Dataset& dataset, std::span<const MethodSpec> methods,
                       const HarnessOptions& options);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

std::string report_json(const MetricsReport& report);
MetricsReport parse_report_json(std::string_view text);

/// One table per dataset: inductive AUC/P/R then transductive AUC/P/R,
/// "mean (std)" cells, "-" for unsupported modes.
std::string report_markdown(const MetricsReport& report);

std::string display_name(std::string_view method);

}  // namespace anchorlink
