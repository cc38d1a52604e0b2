#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "anchorlink/anchors/anchor_map.hpp"
#include "anchorlink/dataset.hpp"
#include "anchorlink/eval/harness.hpp"
#include "anchorlink/graph/pagerank.hpp"
#include "anchorlink/graph/stats.hpp"
#include "anchorlink/graph/subgraph.hpp"
#include "anchorlink/ingest/dump_reader.hpp"
#include "anchorlink/ingest/pipeline.hpp"
#include "anchorlink/text/utf8.hpp"
#include "config.hpp"
#include "gzstream.hpp"

namespace anchorlink::cli {
namespace {

namespace fs = std::filesystem;

/// Input the user got wrong: reported and mapped to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

bool ends_with(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

void write_text(const fs::path& file, std::string_view text) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());
  out << text;
}

int cmd_ingest(const std::string& dump, const fs::path& out_dir, std::ostream& out) {
  IngestStats stats;
  if (dump == "-") {
    stats = ingest_dump(std::cin, out_dir);
  } else {
    if (ends_with(dump, ".bz2")) {
      throw UsageError("bzip2 dumps are not read directly; pipe them: bzcat " + dump + " | anchorlink ingest --dump -");
    }
    if (!fs::is_regular_file(dump)) throw UsageError("cannot read dump " + dump);
    if (ends_with(dump, ".gz")) {
      GzipInput in(dump);
      if (!in) throw UsageError("cannot read dump " + dump);
      stats = ingest_dump(in, out_dir);
    } else {
      std::ifstream in(dump, std::ios::binary);
      if (!in) throw UsageError("cannot read dump " + dump);
      stats = ingest_dump(in, out_dir);
    }
  }
  out << "pages " << stats.pages << '\n'
      << "articles " << stats.articles << '\n'
      << "redirects " << stats.redirects << '\n'
      << "non-main pages " << stats.non_main_pages << '\n'
      << "skipped pages " << stats.skipped_pages << '\n'
      << "links " << stats.links << '\n'
      << "unresolved links " << stats.unresolved_links << '\n'
      << "self links " << stats.self_links << '\n'
      << "unmatchable anchors " << stats.unmatchable_anchors << '\n'
      << "dropped redirects " << stats.dropped_redirects << '\n'
      << "duplicate titles " << stats.duplicate_titles << '\n'
      << "markup warnings " << stats.markup.total() << '\n';
  return kExitOk;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = up;
    }
  }
  return row[b.size()];
}

/// Exact title first, then redirect aliases.
std::optional<NodeId> resolve_title(const std::vector<Article>& articles, std::string_view query) {
  const std::string title = normalize_title(query);
  for (const Article& a : articles) {
    if (a.title == title) return a.id;
  }
  for (const Article& a : articles) {
    if (std::find(a.aliases.begin(), a.aliases.end(), title) != a.aliases.end()) return a.id;
  }
  return std::nullopt;
}

std::vector<std::string> near_misses(const std::vector<Article>& articles, std::string_view query,
                                     std::size_t limit) {
  const std::string lowered = utf8::lower(query);
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const Article& a : articles) {
    ranked.emplace_back(edit_distance(lowered, utf8::lower(a.title)), a.title);
    for (const std::string& alias : a.aliases) ranked.emplace_back(edit_distance(lowered, utf8::lower(alias)), alias);
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> titles;
  for (const auto& [distance, title] : ranked) {
    if (titles.size() == limit) break;
    if (std::find(titles.begin(), titles.end(), title) == titles.end()) titles.push_back(title);
  }
  return titles;
}

std::string slug(std::string_view title) {
  std::string s;
  for (char c : title) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

int cmd_subgraph(const fs::path& dataset_dir, const std::vector<std::string>& seeds, std::size_t k,
                 double damping, const fs::path& out_dir, std::ostream& out) {
  const Dataset dataset = load_dataset(dataset_dir);
  if (k < 1) throw UsageError("--k must be at least 1");
  for (const std::string& seed_title : seeds) {
    const auto seed = resolve_title(dataset.articles, seed_title);
    if (!seed) {
      std::string message = "unknown seed article '" + seed_title + "'; closest titles:";
      for (const std::string& t : near_misses(dataset.articles, seed_title, 5)) message += "\n  " + t;
      throw UsageError(message);
    }
  }
  for (const std::string& seed_title : seeds) {
    const NodeId seed = *resolve_title(dataset.articles, seed_title);
    PprOptions options;
    options.damping = damping;
    const PprScores scores = personalized_pagerank(dataset.network, seed, options);
    const Subgraph subgraph = topk_subgraph(dataset.network, scores, k, dataset.articles);
    const fs::path target = seeds.size() == 1 ? out_dir : out_dir / slug(dataset.articles[seed].title);
    save_dataset(target, extract_subgraph(dataset, subgraph));
    write_remap(target / "remap.tsv", subgraph.new_to_old);
    out << dataset.articles[seed].title << ": " << subgraph.network.node_count() << " nodes, "
        << subgraph.network.edge_count() << " edges, PageRank " << (scores.converged ? "converged" : "did not converge")
        << " after " << scores.iterations << " iterations -> " << target.string() << '\n';
  }
  return kExitOk;
}

int cmd_dataset_stats(const fs::path& dataset_dir, const std::optional<fs::path>& samples_out, std::ostream& out) {
  const Dataset dataset = load_dataset(dataset_dir);
  const AnchorMap map = build_anchor_map(dataset.network);
  const std::vector<DocumentSamples> samples = build_eval_samples(dataset.network, map, dataset.articles);
  std::vector<SampleCounts> counts;
  for (const DocumentSamples& s : samples) counts.push_back({s.positives.size(), s.negatives.size()});
  const NetworkStats stats = network_stats(dataset.network, dataset.articles, std::span<const SampleCounts>(counts));
  char line[256];
  out << "n_V " << stats.nodes << '\n' << "n_E " << stats.edges << '\n';
  std::snprintf(line, sizeof line, "density %.4f%%\n", stats.density_percent);
  out << line << "n_W " << stats.vocabulary << '\n';
  std::snprintf(line, sizeof line, "l_D %.2f (%.2f)\n", stats.abstract_tokens.mean, stats.abstract_tokens.std);
  out << line;
  if (stats.positives && stats.negatives) {
    std::snprintf(line, sizeof line, "n+ %.2f (%.2f)\nn- %.2f (%.2f)\n", stats.positives->mean, stats.positives->std,
                  stats.negatives->mean, stats.negatives->std);
    out << line;
  }
  if (samples_out) {
    std::ostringstream text;
    write_samples(text, samples);
    write_text(*samples_out, text.str());
  }
  return kExitOk;
}

int cmd_eval(const fs::path& dataset_dir, const std::optional<fs::path>& config_file, const std::string& mode,
             std::optional<int> runs, std::optional<std::uint64_t> base_seed, const fs::path& out_dir,
             std::ostream& out, std::ostream& err) {
  PipelineConfig config = config_file ? load_config(*config_file) : PipelineConfig{};
  if (runs) {
    if (*runs < 1) throw UsageError("--runs must be at least 1");
    config.harness.runs = *runs;
  }
  if (base_seed) config.harness.base_seed = *base_seed;
  if (mode == "transductive") {
    config.harness.modes = {EvalMode::kTransductive};
  } else if (mode == "inductive") {
    config.harness.modes = {EvalMode::kInductive};
  }
  if (config.harness.dataset_name == HarnessOptions{}.dataset_name) {
    config.harness.dataset_name = fs::absolute(dataset_dir).lexically_normal().filename().string();
    if (config.harness.dataset_name.empty()) {
      config.harness.dataset_name = fs::absolute(dataset_dir).lexically_normal().parent_path().filename().string();
    }
  }
  config.harness.artifacts_dir = out_dir;

  const Dataset dataset = load_dataset(dataset_dir);
  const MetricsReport report = run_eval(dataset, config.methods, config.harness);
  write_text(out_dir / "report.json", report_json(report));
  const std::string table = report_markdown(report);
  write_text(out_dir / "report.md", table);
  out << table;
  for (const MethodResult& r : report.results) {
    if (r.status == MethodStatus::kFailed) {
      err << "method " << r.method << " failed (" << eval_mode_name(r.mode) << "): " << r.error << '\n';
    }
  }
  return report.has_failures() ? kExitPartial : kExitOk;
}

int cmd_report(const std::vector<fs::path>& inputs, const std::optional<fs::path>& out_file, std::ostream& out) {
  MetricsReport merged;
  for (const fs::path& input : inputs) {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot read report " + input.string());
    std::ostringstream text;
    text << in.rdbuf();
    MetricsReport part = parse_report_json(text.str());
    for (MethodResult& r : part.results) merged.results.push_back(std::move(r));
  }
  const std::string table = report_markdown(merged);
  if (out_file) {
    write_text(*out_file, table);
  } else {
    out << table;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anchor-text-aware hyperlink prediction datasets and evaluation", "anchorlink"};
  app.require_subcommand(1);

  std::string dump;
  fs::path out_dir;
  auto* ingest = app.add_subcommand("ingest", "Extract articles.jsonl and links.tsv from an XML dump");
  ingest->add_option("--dump", dump, "Dump file (.xml or .xml.gz), or - for stdin")->required();
  ingest->add_option("--out", out_dir, "Output dataset directory")->required();

  fs::path dataset_dir;
  std::vector<std::string> seeds;
  std::size_t k = 1000;
  double damping = 0.85;
  std::optional<fs::path> config_file;
  auto* subgraph = app.add_subcommand("subgraph", "Personalized PageRank top-k subgraph around seed articles");
  subgraph->add_option("--dataset", dataset_dir, "Input dataset directory")->required();
  subgraph->add_option("--seed-article", seeds, "Seed article title (repeatable; redirects accepted)");
  subgraph->add_option("--k", k, "Number of articles to keep");
  subgraph->add_option("--damping", damping, "PageRank damping factor")->check(CLI::Range(0.0, 1.0));
  subgraph->add_option("--config", config_file, "JSON config supplying seed_articles, k and damping");
  subgraph->add_option("--out", out_dir, "Output directory")->required();

  std::optional<fs::path> samples_out;
  auto* stats = app.add_subcommand("dataset-stats", "Print dataset statistics");
  stats->add_option("--dataset", dataset_dir, "Dataset directory")->required();
  stats->add_option("--samples-out", samples_out, "Write evaluation samples (source, target, label, anchors)");

  std::string mode = "both";
  std::optional<int> runs;
  std::optional<std::uint64_t> base_seed;
  auto* eval = app.add_subcommand("eval", "Run the link-prediction evaluation");
  eval->add_option("--dataset", dataset_dir, "Dataset directory")->required();
  eval->add_option("--config", config_file, "JSON config (methods, runs, seeds, hyperparameters)");
  eval->add_option("--mode", mode, "Evaluation mode")->check(CLI::IsMember({"transductive", "inductive", "both"}));
  eval->add_option("--runs", runs, "Number of runs (overrides config)");
  eval->add_option("--base-seed", base_seed, "Base seed (overrides config)");
  eval->add_option("--out", out_dir, "Output directory for report and split artifacts")->required();

  std::vector<fs::path> report_inputs;
  std::optional<fs::path> report_out;
  auto* report = app.add_subcommand("report", "Render report.json files as a markdown table");
  report->add_option("--in", report_inputs, "report.json files")->required();
  report->add_option("--out", report_out, "Markdown output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (*ingest) return cmd_ingest(dump, out_dir, out);
    if (*subgraph) {
      if (config_file) {
        const PipelineConfig config = load_config(*config_file);
        if (seeds.empty()) seeds = config.seed_articles;
        if (subgraph->count("--k") == 0) k = config.k;
        if (subgraph->count("--damping") == 0) damping = config.damping;
      }
      if (seeds.empty()) throw UsageError("no seed article given (--seed-article or config seed_articles)");
      return cmd_subgraph(dataset_dir, seeds, k, damping, out_dir, out);
    }
    if (*stats) return cmd_dataset_stats(dataset_dir, samples_out, out);
    if (*eval) return cmd_eval(dataset_dir, config_file, mode, runs, base_seed, out_dir, out, err);
    if (*report) return cmd_report(report_inputs, report_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPartial;
  }
  return kExitUsage;
}

}  // namespace anchorlink::cli
