#include "anchorlink/eval/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "anchorlink/eval/metrics.hpp"
#include "anchorlink/rng.hpp"

namespace anchorlink {
namespace {

std::string serialize_train(const DocumentNetwork& network) {
  std::ostringstream out;
  for (const LinkRecord& link : network_links(network)) write_link(out, link);
  return out.str();
}

std::string serialize_pairs(std::span<const TestPair> pairs) {
  std::ostringstream out;
  write_test_pairs(out, pairs);
  return out.str();
}

void write_file(const std::filesystem::path& file, std::string_view bytes) {
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ULL;
  return h;
}

std::uint64_t method_seed(std::uint64_t run_seed, std::string_view method) {
  return splitmix64(run_seed ^ fnv1a(method));
}

std::unique_ptr<Predictor> instantiate(const MethodSpec& spec, const PredictorOptions& options) {
  if (spec.predictions) return make_external_predictor(spec.name, *spec.predictions, spec.binary);
  return make_predictor(spec.name, options);
}

void finalize(MethodResult& result) {
  std::vector<double> auc, p, r;
  for (const RunMetrics& m : result.per_run) {
    auc.push_back(m.auc);
    p.push_back(m.precision);
    r.push_back(m.recall);
  }
  result.auc = summarize(auc);
  result.precision = summarize(p);
  result.recall = summarize(r);
}

std::string_view status_name(MethodStatus status) {
  switch (status) {
    case MethodStatus::kOk: return "ok";
    case MethodStatus::kUnsupported: return "unsupported";
    case MethodStatus::kFailed: return "failed";
  }
  return "failed";
}

}  // namespace

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return s;
}

bool MetricsReport::has_failures() const {
  for (const MethodResult& r : results) {
    if (r.status == MethodStatus::kFailed) return true;
  }
  return false;
}

const MethodResult* MetricsReport::find(EvalMode mode, std::string_view method) const {
  for (const MethodResult& r : results) {
    if (r.mode == mode && r.method == method) return &r;
  }
  return nullptr;
}

std::string fnv1a_hex(std::string_view bytes) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buffer;
}

MetricsReport run_eval(const Dataset& dataset, std::span<const MethodSpec> methods,
                       const HarnessOptions& options) {
  if (options.runs < 1) throw ArgumentError("runs must be at least 1");
  const std::span<const Article> articles(dataset.articles);
  const AnchorMap anchor_map = build_anchor_map(dataset.network);
  const AnchorMap title_map = build_title_map(articles);
  const CandidateIndex anchor_candidates(anchor_map, articles);
  const CandidateIndex title_candidates(title_map, articles);

  MetricsReport report;
  for (EvalMode mode : options.modes) {
    std::vector<MethodResult> results;
    std::vector<std::unique_ptr<Predictor>> predictors;
    for (const MethodSpec& spec : methods) {
      MethodResult result;
      result.dataset = options.dataset_name;
      result.mode = mode;
      result.method = spec.name;
      try {
        predictors.push_back(instantiate(spec, options.predictors));
        if (!predictors.back()->supports(mode)) result.status = MethodStatus::kUnsupported;
      } catch (const std::exception& e) {
        predictors.push_back(nullptr);
        result.status = MethodStatus::kFailed;
        result.error = e.what();
      }
      results.push_back(std::move(result));
    }

    std::string split_bytes;
    for (int run = 0; run < options.runs; ++run) {
      const std::uint64_t run_seed = options.base_seed + static_cast<std::uint64_t>(run);
      const EvalSplit split =
          mode == EvalMode::kTransductive
              ? split_transductive(dataset.network, anchor_candidates, options.transductive_ratio, run_seed)
              : split_inductive(dataset.network, anchor_candidates, options.inductive_ratio, run_seed);
      const std::string train_bytes = serialize_train(split.train_network);
      const std::string pair_bytes = serialize_pairs(split.test_pairs);
      split_bytes += train_bytes;
      split_bytes += pair_bytes;
      std::filesystem::path run_dir;
      if (options.artifacts_dir) {
        run_dir = *options.artifacts_dir / "splits" / ("run_" + std::to_string(run)) /
                  std::string(eval_mode_name(mode));
        write_file(run_dir / "train_links.tsv", train_bytes);
        write_file(run_dir / "test_pairs.tsv", pair_bytes);
      }

      std::vector<bool> training(articles.size());
      for (std::size_t id = 0; id < articles.size(); ++id) {
        training[id] = split.train_network.contains(static_cast<NodeId>(id));
      }
      std::unique_ptr<LsaSpace> lsa;
      TrainingContext context;
      context.mode = mode;
      context.run = run;
      context.articles = articles;
      context.train_network = &split.train_network;
      context.anchor_candidates = &anchor_candidates;
      context.title_candidates = &title_candidates;
      context.lsa = [&]() -> const LsaSpace& {
        if (!lsa) {
          LsaOptions lsa_options = options.lsa;
          lsa_options.svd.seed = splitmix64(run_seed ^ 0x4c5341ULL);
          lsa = std::make_unique<LsaSpace>(articles, training, lsa_options);
        }
        return *lsa;
      };

      for (std::size_t m = 0; m < methods.size(); ++m) {
        MethodResult& result = results[m];
        if (result.status != MethodStatus::kOk) continue;
        Predictor& predictor = *predictors[m];
        try {
          context.seed = method_seed(run_seed, methods[m].name);
          predictor.fit(context);
          std::vector<ScoredPair> scored;
          scored.reserve(split.test_pairs.size());
          for (const TestPair& pair : split.test_pairs) {
            const double score = predictor.score(pair.source, pair.target);
            if (!(score >= 0.0 && score <= 1.0)) {
              throw Error("score out of [0, 1] for pair " + std::to_string(pair.source) + " -> " +
                          std::to_string(pair.target));
            }
            scored.push_back({pair.source, pair.target, score, pair.label});
          }
          if (options.artifacts_dir) {
            std::ostringstream out;
            out.precision(17);
            for (const ScoredPair& s : scored) out << s.source << '\t' << s.target << '\t' << s.score << '\n';
            write_file(run_dir / "predictions" / (methods[m].name + ".tsv"), out.str());
          }
          const PrecisionRecall pr = precision_recall_at_prevalence(scored, predictor.binary());
          result.per_run.push_back({pr_auc(scored), pr.precision, pr.recall});
        } catch (const UnsupportedModeError& e) {
          result.status = MethodStatus::kUnsupported;
          result.per_run.clear();
        } catch (const std::exception& e) {
          result.status = MethodStatus::kFailed;
          result.error = "run " + std::to_string(run) + ": " + e.what();
        }
      }
    }

    const std::string hash = fnv1a_hex(split_bytes);
    for (MethodResult& result : results) {
      result.split_hash = hash;
      if (result.status == MethodStatus::kOk) finalize(result);
      report.results.push_back(std::move(result));
    }
  }
  return report;
}

std::string report_json(const MetricsReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const MethodResult& r : report.results) {
    nlohmann::ordered_json row;
    row["dataset"] = r.dataset;
    row["mode"] = eval_mode_name(r.mode);
    row["method"] = r.method;
    row["status"] = status_name(r.status);
    if (r.status == MethodStatus::kOk) {
      row["auc_mean"] = r.auc.mean;
      row["auc_std"] = r.auc.std;
      row["p_mean"] = r.precision.mean;
      row["p_std"] = r.precision.std;
      row["r_mean"] = r.recall.mean;
      row["r_std"] = r.recall.std;
    } else {
      for (const char* key : {"auc_mean", "auc_std", "p_mean", "p_std", "r_mean", "r_std"}) row[key] = nullptr;
    }
    row["runs"] = r.per_run.size();
    row["split_hash"] = r.split_hash;
    if (!r.error.empty()) row["error"] = r.error;
    nlohmann::ordered_json per_run = nlohmann::ordered_json::array();
    for (const RunMetrics& m : r.per_run) {
      per_run.push_back({{"auc", m.auc}, {"p", m.precision}, {"r", m.recall}});
    }
    row["per_run"] = std::move(per_run);
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

MetricsReport parse_report_json(std::string_view text) {
  nlohmann::json rows;
  try {
    rows = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what(), e.byte);
  }
  if (!rows.is_array()) throw ParseError("report: expected a JSON array", 0);
  MetricsReport report;
  try {
    for (const auto& row : rows) {
      MethodResult r;
      r.dataset = row.at("dataset").get<std::string>();
      const std::string mode = row.at("mode").get<std::string>();
      if (mode == "transductive") {
        r.mode = EvalMode::kTransductive;
      } else if (mode == "inductive") {
        r.mode = EvalMode::kInductive;
      } else {
        throw ParseError("report: unknown mode '" + mode + "'", 0);
      }
      r.method = row.at("method").get<std::string>();
      const std::string status = row.value("status", std::string("ok"));
      r.status = status == "ok"            ? MethodStatus::kOk
                 : status == "unsupported" ? MethodStatus::kUnsupported
                                           : MethodStatus::kFailed;
      if (r.status == MethodStatus::kOk) {
        r.auc = {row.at("auc_mean").get<double>(), row.at("auc_std").get<double>()};
        r.precision = {row.at("p_mean").get<double>(), row.at("p_std").get<double>()};
        r.recall = {row.at("r_mean").get<double>(), row.at("r_std").get<double>()};
      }
      if (row.contains("per_run")) {
        for (const auto& m : row["per_run"]) {
          r.per_run.push_back({m.at("auc").get<double>(), m.at("p").get<double>(), m.at("r").get<double>()});
        }
      }
      r.split_hash = row.value("split_hash", std::string());
      r.error = row.value("error", std::string());
      report.results.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what(), 0);
  }
  return report;
}

std::string display_name(std::string_view method) {
  if (method == "at_title") return "AT (title)";
  if (method == "at_anchor") return "AT (anchor)";
  if (method == "lsa") return "LSA";
  if (method == "deepwalk") return "DW";
  if (method == "atilp") return "ATILP";
  return std::string(method);
}

std::string report_markdown(const MetricsReport& report) {
  std::vector<std::string> datasets;
  for (const MethodResult& r : report.results) {
    if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end()) datasets.push_back(r.dataset);
  }
  auto cell = [](const Summary& s) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.2f (%5.2f)", s.mean, s.std);
    return std::string(buffer);
  };

  std::ostringstream out;
  for (const std::string& dataset : datasets) {
    std::vector<std::string> methods;
    for (const MethodResult& r : report.results) {
      if (r.dataset == dataset && std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
        methods.push_back(r.method);
      }
    }
    out << "| " << dataset << " | Inductive AUC | P | R | Transductive AUC | P | R |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const std::string& method : methods) {
      out << "| " << display_name(method) << " |";
      for (EvalMode mode : {EvalMode::kInductive, EvalMode::kTransductive}) {
        const MethodResult* r = nullptr;
        for (const MethodResult& candidate : report.results) {
          if (candidate.dataset == dataset && candidate.mode == mode && candidate.method == method) r = &candidate;
        }
        if (r && r->status == MethodStatus::kOk) {
          out << ' ' << cell(r->auc) << " | " << cell(r->precision) << " | " << cell(r->recall) << " |";
        } else {
          const char* mark = r && r->status == MethodStatus::kFailed ? "failed" : "-";
          out << ' ' << mark << " | " << mark << " | " << mark << " |";
        }
      }
      out << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace anchorlink
