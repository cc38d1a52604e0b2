#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace anchorlink::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& object, std::string_view where, std::initializer_list<std::string_view> keys) {
  if (!object.is_object()) throw ArgumentError(std::string(where) + " must be an object");
  const std::set<std::string_view> known(keys);
  for (const auto& item : object.items()) {
    if (!known.contains(item.key())) {
      throw ArgumentError("unknown config key '" + std::string(where) + "." + item.key() + "'");
    }
  }
}

template <typename T>
void read(const json& object, const char* key, T& target) {
  if (object.contains(key)) target = object.at(key).get<T>();
}

double checked_ratio(double ratio, const char* what) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw ArgumentError(std::string(what) + " must be in (0, 1)");
  return ratio;
}

}  // namespace

PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("config is not valid JSON: ") + e.what());
  }
  PipelineConfig config;
  try {
    reject_unknown(root, "config",
                   {"dataset_name", "dump", "seed_articles", "k", "damping", "dimension", "methods", "runs",
                    "base_seed", "ratios", "lsa", "deepwalk", "atilp", "out"});
    auto resolve = [&](const std::string& p) {
      const std::filesystem::path path(p);
      return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
    };
    if (root.contains("dump")) {
      config.dump = resolve(root["dump"].get<std::string>());
      if (!std::filesystem::exists(*config.dump)) throw ArgumentError("dump not found: " + config.dump->string());
    }
    if (root.contains("out")) config.out = resolve(root["out"].get<std::string>());
    read(root, "dataset_name", config.harness.dataset_name);
    read(root, "seed_articles", config.seed_articles);
    read(root, "k", config.k);
    if (config.k < 1) throw ArgumentError("k must be at least 1");
    read(root, "damping", config.damping);
    if (!(config.damping > 0.0 && config.damping < 1.0)) throw ArgumentError("damping must be in (0, 1)");
    read(root, "runs", config.harness.runs);
    if (config.harness.runs < 1) throw ArgumentError("runs must be at least 1");
    read(root, "base_seed", config.harness.base_seed);

    if (root.contains("dimension")) {
      const int d = root["dimension"].get<int>();
      config.harness.lsa.dimension = d;
      config.harness.predictors.deepwalk.dimension = d;
    }
    if (root.contains("ratios")) {
      const json& ratios = root["ratios"];
      reject_unknown(ratios, "ratios", {"transductive", "inductive"});
      read(ratios, "transductive", config.harness.transductive_ratio);
      read(ratios, "inductive", config.harness.inductive_ratio);
    }
    checked_ratio(config.harness.transductive_ratio, "ratios.transductive");
    checked_ratio(config.harness.inductive_ratio, "ratios.inductive");

    if (root.contains("lsa")) {
      const json& lsa = root["lsa"];
      reject_unknown(lsa, "lsa", {"dimension", "power_iterations", "oversampling", "exact_max_cells"});
      read(lsa, "dimension", config.harness.lsa.dimension);
      read(lsa, "power_iterations", config.harness.lsa.svd.power_iterations);
      read(lsa, "oversampling", config.harness.lsa.svd.oversampling);
      read(lsa, "exact_max_cells", config.harness.lsa.svd.exact_max_cells);
    }
    if (config.harness.lsa.dimension < 1) throw ArgumentError("lsa.dimension must be at least 1");
    if (root.contains("deepwalk")) {
      const json& dw = root["deepwalk"];
      auto& o = config.harness.predictors.deepwalk;
      reject_unknown(dw, "deepwalk",
                     {"walks_per_node", "walk_length", "window", "negatives", "dimension", "learning_rate",
                      "undirected"});
      read(dw, "walks_per_node", o.walks_per_node);
      read(dw, "walk_length", o.walk_length);
      read(dw, "window", o.window);
      read(dw, "negatives", o.negatives);
      read(dw, "dimension", o.dimension);
      read(dw, "learning_rate", o.learning_rate);
      read(dw, "undirected", o.undirected);
      if (o.walks_per_node < 1 || o.walk_length < 1 || o.window < 1 || o.negatives < 0 || o.dimension < 1 ||
          !(o.learning_rate > 0.0)) {
        throw ArgumentError("deepwalk parameters out of range");
      }
    }
    if (root.contains("atilp")) {
      const json& atilp = root["atilp"];
      reject_unknown(atilp, "atilp", {"positives", "negatives"});
      read(atilp, "positives", config.harness.predictors.atilp.positives);
      read(atilp, "negatives", config.harness.predictors.atilp.negatives);
    }

    if (root.contains("methods")) {
      config.methods.clear();
      for (const json& entry : root["methods"]) {
        MethodSpec spec;
        if (entry.is_string()) {
          spec.name = entry.get<std::string>();
          make_predictor(spec.name, config.harness.predictors);  // validates the name
        } else {
          reject_unknown(entry, "methods[]", {"name", "predictions", "binary"});
          spec.name = entry.at("name").get<std::string>();
          if (entry.contains("predictions")) spec.predictions = resolve(entry["predictions"].get<std::string>()).string();
          read(entry, "binary", spec.binary);
          if (!spec.predictions) make_predictor(spec.name, config.harness.predictors);
        }
        for (const MethodSpec& other : config.methods) {
          if (other.name == spec.name) throw ArgumentError("duplicate method '" + spec.name + "'");
        }
        config.methods.push_back(std::move(spec));
      }
      if (config.methods.empty()) throw ArgumentError("methods must not be empty");
    }
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config: ") + e.what());
  }
  return config;
}

PipelineConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ArgumentError("cannot read config " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), file.parent_path());
}

}  // namespace anchorlink::cli
