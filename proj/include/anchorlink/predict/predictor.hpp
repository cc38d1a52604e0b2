#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "anchorlink/anchors/anchor_map.hpp"
#include "anchorlink/eval/splits.hpp"
#include "anchorlink/predict/atilp.hpp"
#include "anchorlink/predict/deepwalk.hpp"
#include "anchorlink/predict/lsa_space.hpp"

namespace anchorlink {

/// Everything a predictor may look at while training for one split. The
/// training network never contains held-out edges or documents; held-out
/// documents are reachable only through their article text.
struct TrainingContext {
  EvalMode mode = EvalMode::kTransductive;
  int run = 0;
  std::span<const Article> articles;
  const DocumentNetwork* train_network = nullptr;
  const CandidateIndex* anchor_candidates = nullptr;
  const CandidateIndex* title_candidates = nullptr;
  /// Lazily fitted LSA space shared by the text-based methods of a split.
  std::function<const LsaSpace&()> lsa;
  std::uint64_t seed = 0;
};

class Predictor {
 public:
  virtual ~Predictor() = default;

  virtual std::string_view name() const = 0;
  /// Binary predictors emit exactly 0 or 1 and are not thresholded.
  virtual bool binary() const { return false; }
  virtual bool supports(EvalMode) const { return true; }
  virtual void fit(const TrainingContext& context) = 0;
  virtual double score(NodeId source, NodeId target) const = 0;
};

struct PredictorOptions {
  DeepWalkOptions deepwalk;
  AtilpOptions atilp;
};

/// Built-in methods: "random", "at_title", "at_anchor", "lsa", "deepwalk",
/// "atilp". Throws ArgumentError for an unknown name.
std::unique_ptr<Predictor> make_predictor(std::string_view name, const PredictorOptions& options);

/// Scores read from predictions.tsv files (source \t target \t score), so
/// externally trained methods can be evaluated on the same splits. The path
/// pattern may contain "{mode}" and "{run}".
std::unique_ptr<Predictor> make_external_predictor(std::string name, std::string path_pattern,
                                                   bool binary = false);

std::map<std::pair<NodeId, NodeId>, double> read_predictions(const std::filesystem::path& file);

}  // namespace anchorlink
