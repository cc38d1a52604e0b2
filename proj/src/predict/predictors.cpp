#include <charconv>
#include <cmath>
#include <fstream>

#include "anchorlink/predict/at.hpp"
#include "anchorlink/predict/predictor.hpp"
#include "anchorlink/predict/random.hpp"

namespace anchorlink {
namespace {

class RandomPredictor final : public Predictor {
 public:
  std::string_view name() const override { return "random"; }
  void fit(const TrainingContext& context) override { seed_ = context.seed; }
  double score(NodeId source, NodeId target) const override { return score_random(seed_, source, target); }

 private:
  std::uint64_t seed_ = 0;
};

/// Cached form of predict_at: candidates are scanned once per article.
class AtPredictor final : public Predictor {
 public:
  explicit AtPredictor(AnchorMode mode) : mode_(mode) {}

  std::string_view name() const override { return mode_ == AnchorMode::kTitle ? "at_title" : "at_anchor"; }
  bool binary() const override { return true; }
  void fit(const TrainingContext& context) override {
    candidates_ = mode_ == AnchorMode::kTitle ? context.title_candidates : context.anchor_candidates;
    if (!candidates_) throw Error("candidate index missing for " + std::string(name()));
  }
  double score(NodeId source, NodeId target) const override {
    if (target >= candidates_->size()) throw ArgumentError("unknown target article " + std::to_string(target));
    return candidates_->find(source, target) ? 1.0 : 0.0;
  }

 private:
  AnchorMode mode_;
  const CandidateIndex* candidates_ = nullptr;
};

class LsaPredictor final : public Predictor {
 public:
  std::string_view name() const override { return "lsa"; }
  void fit(const TrainingContext& context) override { space_ = &context.lsa(); }
  double score(NodeId source, NodeId target) const override { return score_lsa(*space_, source, target); }

 private:
  const LsaSpace* space_ = nullptr;
};

class DeepWalkPredictor final : public Predictor {
 public:
  explicit DeepWalkPredictor(DeepWalkOptions options) : options_(options) {}

  std::string_view name() const override { return "deepwalk"; }
  bool supports(EvalMode mode) const override { return mode == EvalMode::kTransductive; }
  void fit(const TrainingContext& context) override {
    if (!supports(context.mode)) throw UnsupportedModeError("DeepWalk has no inductive mode");
    DeepWalkOptions options = options_;
    options.seed = context.seed;
    model_ = std::make_unique<DeepWalkModel>(fit_deepwalk(*context.train_network, options));
  }
  double score(NodeId source, NodeId target) const override {
    return score_deepwalk(*model_, source, target);
  }

 private:
  DeepWalkOptions options_;
  std::unique_ptr<DeepWalkModel> model_;
};

class AtilpPredictor final : public Predictor {
 public:
  explicit AtilpPredictor(AtilpOptions options) : options_(options) {}

  std::string_view name() const override { return "atilp"; }
  void fit(const TrainingContext& context) override {
    space_ = &context.lsa();
    candidates_ = context.anchor_candidates;
    AtilpOptions options = options_;
    options.seed = context.seed;
    model_ = fit_atilp(*context.train_network, *space_, *candidates_, options);
  }
  double score(NodeId source, NodeId target) const override {
    return score_atilp(model_, *space_, candidates_->find(source, target));
  }
  const AtilpModel& model() const { return model_; }

 private:
  AtilpOptions options_;
  const LsaSpace* space_ = nullptr;
  const CandidateIndex* candidates_ = nullptr;
  AtilpModel model_;
};

class ExternalPredictor final : public Predictor {
 public:
  ExternalPredictor(std::string name, std::string pattern, bool binary)
      : name_(std::move(name)), pattern_(std::move(pattern)), binary_(binary) {}

  std::string_view name() const override { return name_; }
  bool binary() const override { return binary_; }
  void fit(const TrainingContext& context) override {
    std::string path = pattern_;
    replace_all(path, "{mode}", std::string(eval_mode_name(context.mode)));
    replace_all(path, "{run}", std::to_string(context.run));
    scores_ = read_predictions(path);
  }
  double score(NodeId source, NodeId target) const override {
    const auto it = scores_.find({source, target});
    if (it == scores_.end()) {
      throw Error(name_ + ": no prediction for pair " + std::to_string(source) + " -> " +
                  std::to_string(target));
    }
    return it->second;
  }

 private:
  static void replace_all(std::string& text, std::string_view from, const std::string& to) {
    for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
      text.replace(pos, from.size(), to);
    }
  }

  std::string name_;
  std::string pattern_;
  bool binary_;
  std::map<std::pair<NodeId, NodeId>, double> scores_;
};

}  // namespace

std::unique_ptr<Predictor> make_predictor(std::string_view name, const PredictorOptions& options) {
  if (name == "random") return std::make_unique<RandomPredictor>();
  if (name == "at_title") return std::make_unique<AtPredictor>(AnchorMode::kTitle);
  if (name == "at_anchor") return std::make_unique<AtPredictor>(AnchorMode::kAnchor);
  if (name == "lsa") return std::make_unique<LsaPredictor>();
  if (name == "deepwalk") return std::make_unique<DeepWalkPredictor>(options.deepwalk);
  if (name == "atilp") return std::make_unique<AtilpPredictor>(options.atilp);
  throw ArgumentError("unknown method '" + std::string(name) + "'");
}

std::unique_ptr<Predictor> make_external_predictor(std::string name, std::string path_pattern, bool binary) {
  return std::make_unique<ExternalPredictor>(std::move(name), std::move(path_pattern), binary);
}

std::map<std::pair<NodeId, NodeId>, double> read_predictions(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open predictions file " + file.string());
  std::map<std::pair<NodeId, NodeId>, double> scores;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    NodeId source = 0;
    NodeId target = 0;
    double score = 0.0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(p, end, source);
    auto r2 = r1.ec == std::errc{} && r1.ptr < end && *r1.ptr == '\t'
                  ? std::from_chars(r1.ptr + 1, end, target)
                  : std::from_chars_result{r1.ptr, std::errc::invalid_argument};
    auto r3 = r2.ec == std::errc{} && r2.ptr < end && *r2.ptr == '\t'
                  ? std::from_chars(r2.ptr + 1, end, score)
                  : std::from_chars_result{r2.ptr, std::errc::invalid_argument};
    if (r3.ec != std::errc{} || !std::isfinite(score) || score < 0.0 || score > 1.0) {
      throw ParseError(file.string() + ": bad prediction on line " + std::to_string(line_number), 0);
    }
    scores[{source, target}] = score;
  }
  return scores;
}

}  // namespace anchorlink
