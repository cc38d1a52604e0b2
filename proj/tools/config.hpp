#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "anchorlink/eval/harness.hpp"

namespace anchorlink::cli {

/// Declarative experiment configuration (JSON). Every key is optional.
struct PipelineConfig {
  std::optional<std::filesystem::path> dump;
  std::vector<std::string> seed_articles;
  std::size_t k = 1000;
  double damping = 0.85;
  std::vector<MethodSpec> methods{{"random"}, {"at_title"}, {"at_anchor"}, {"lsa"}, {"deepwalk"}, {"atilp"}};
  HarnessOptions harness;
  std::optional<std::filesystem::path> out;
};

/// Throws ArgumentError for unknown keys, wrong types or invalid values.
PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& file);

}  // namespace anchorlink::cli
