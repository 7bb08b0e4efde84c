// turaev: command-line front end.
//   turaev info|classify|reduce|corpus|check [options] FILES...
// Exit status: 0 ok, 1 property violation, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "turaev/enumerate.hpp"
#include "turaev/parallel.hpp"
#include "turaev/report.hpp"
#include "turaev/states.hpp"

namespace fs = std::filesystem;
using turaev::report::Json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2 };

struct Config {
  std::string format = "json";
  std::uint64_t seed = 1;
  int max_crossings = 6;
  int max_dual_len = 6;
  int jobs = 1;
  int random_count = 0;
  bool collapse = false;
  bool turaev_surface = false;
  std::string out_dir;
  std::vector<std::string> files;
};

struct ItemResult {
  std::string text;
  int status = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw turaev::DiagramError(turaev::DiagramError::Kind::precondition, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const Config& cfg, const std::string& file, Json body) {
  Json j;
  j["file"] = file;
  for (auto& [k, v] : body.items()) j[k] = v;
  if (cfg.format == "text") return "== " + file + "\n" + turaev::report::text(body);
  return j.dump() + "\n";
}

ItemResult input_error(const Config& cfg, const std::string& file, const std::string& what) {
  return {render(cfg, file, Json{{"error", what}}), kInputError};
}

// Runs `one` over the files in parallel and prints results in input order.
int run_files(const Config& cfg, const std::function<ItemResult(const std::string&)>& one) {
  const auto results = turaev::parallel_map<ItemResult>(static_cast<int>(cfg.files.size()), cfg.jobs, [&](int i) {
    try {
      return one(cfg.files[i]);
    } catch (const turaev::DiagramError& e) {
      return input_error(cfg, cfg.files[i], e.what());
    } catch (const turaev::InvariantViolation& e) {
      return ItemResult{render(cfg, cfg.files[i], Json{{"violation", e.what()}}), kViolation};
    }
  });
  int status = kOk;
  for (const auto& r : results) {
    std::cout << r.text;
    status = std::max(status, r.status);
  }
  return status;
}

int cmd_info(const Config& cfg) {
  return run_files(cfg, [&](const std::string& f) {
    const auto d = turaev::parse_pd(read_file(f));
    return ItemResult{render(cfg, f, turaev::report::info(d))};
  });
}

int cmd_classify(const Config& cfg) {
  return run_files(cfg, [&](const std::string& f) {
    const auto d = turaev::parse_pd(read_file(f));
    if (cfg.format == "dot") return ItemResult{turaev::report::decomposition_dot(d, cfg.collapse)};
    if (cfg.format == "svg") return ItemResult{turaev::report::decomposition_svg(d)};
    auto j = turaev::report::classify(d);
    int status = kOk;
    if (j.value("structure", "") == "unclassified") status = kViolation;
    if (j.contains("descriptor") && j["descriptor"]["case"].is_string()) status = kViolation;
    return ItemResult{render(cfg, f, std::move(j)), status};
  });
}

int cmd_reduce(const Config& cfg) {
  return run_files(cfg, [&](const std::string& f) {
    const auto d = turaev::parse_pd(read_file(f));
    const auto ladder = turaev::reduce_ladder(d);
    auto j = turaev::report::ladder(ladder);
    const int status = ladder.all_terminals_alternating() ? kOk : kViolation;
    if (!cfg.out_dir.empty()) {
      fs::create_directories(cfg.out_dir);
      std::ofstream(fs::path(cfg.out_dir) / (fs::path(f).stem().string() + ".ladder.json")) << j.dump(2) << "\n";
    }
    return ItemResult{render(cfg, f, std::move(j)), status};
  });
}

int cmd_check(const Config& cfg) {
  return run_files(cfg, [&](const std::string& f) {
    const auto text = read_file(f);
    const turaev::SurfaceDiagram s = cfg.turaev_surface ? turaev::build_turaev_complex(turaev::parse_pd(text)).surface
                                                        : turaev::parse_surface(text);
    return ItemResult{render(cfg, f, turaev::report::check(s, cfg.max_dual_len))};
  });
}

// Property checks on one corpus diagram; empty when all hold.
std::string corpus_violation(const turaev::PlanarDiagram& d) {
  if (!d.is_connected() || !turaev::is_prime(d)) return {};
  const int g = turaev::turaev_genus(d);
  if (turaev::classify_genus1(d).ok() != (g == 1)) return "genus-one classification disagrees with genus " + std::to_string(g);
  if (g == 2) {
    const auto desc = turaev::classify_genus2(d);
    if (desc->case_label == 0) return "unmatched genus-two descriptor " + desc->pattern;
  }
  return {};
}

int cmd_corpus(const Config& cfg) {
  std::vector<turaev::PlanarDiagram> corpus;
  if (cfg.max_crossings > 0) corpus = turaev::enumerate_diagrams(cfg.max_crossings);
  if (cfg.random_count > 0)
    for (auto& d : turaev::random_corpus(cfg.seed, cfg.random_count, cfg.max_crossings)) corpus.push_back(std::move(d));
  const auto lines = turaev::parallel_map<std::pair<std::string, std::string>>(
      static_cast<int>(corpus.size()), cfg.jobs,
      [&](int i) { return std::make_pair(turaev::manifest_line(corpus[i]), corpus_violation(corpus[i])); });
  int status = kOk;
  std::ostringstream manifest;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    manifest << lines[i].first << "\n";
    if (!lines[i].second.empty()) {
      std::cerr << "violation: " << turaev::to_pd_string(corpus[i]) << ": " << lines[i].second << "\n";
      status = kViolation;
    }
  }
  if (cfg.out_dir.empty()) {
    std::cout << manifest.str();
    return status;
  }
  fs::create_directories(cfg.out_dir);
  std::ofstream(fs::path(cfg.out_dir) / "manifest.jsonl") << manifest.str();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "%06zu.pd", i);
    std::ofstream(fs::path(cfg.out_dir) / name) << turaev::to_pd_string(turaev::canonical_code(corpus[i])) << "\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turaev genus and alternating tangle structure of link diagrams"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "svg", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized corpora");
  app.add_option("--max-crossings", cfg.max_crossings, "Crossing bound for corpora")->check(CLI::NonNegativeNumber);
  app.add_option("--max-dual-len", cfg.max_dual_len, "Longest dual cycle searched")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto files = [&](CLI::App* sub) { sub->add_option("FILES", cfg.files, "Diagram files")->required()->check(CLI::ExistingFile); };
  auto* info = app.add_subcommand("info", "Crossings, state circles, genus, adequacy, primality")->fallthrough();
  files(info);
  auto* classify = app.add_subcommand("classify", "Genus-one cycle or genus-two descriptor")->fallthrough();
  classify->add_flag("--collapse", cfg.collapse, "Collapse 2-tangle chains in DOT output");
  files(classify);
  auto* reduce = app.add_subcommand("reduce", "Genus reduction ladder")->fallthrough();
  reduce->add_option("--out", cfg.out_dir, "Directory for ladder files");
  files(reduce);
  auto* corpus = app.add_subcommand("corpus", "Exhaustive and seeded random corpus with manifest")->fallthrough();
  corpus->add_option("--random", cfg.random_count, "Number of random diagrams")->check(CLI::NonNegativeNumber);
  corpus->add_option("--out", cfg.out_dir, "Corpus directory");
  auto* check = app.add_subcommand("check", "Two-intersection loops and Hayashi complexity")->fallthrough();
  check->add_flag("--turaev", cfg.turaev_surface, "Check the Turaev surface of a planar diagram");
  files(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  const bool graph = cfg.format == "dot" || cfg.format == "svg";
  if (graph && !classify->parsed()) {
    std::cerr << "--format " << cfg.format << " is only available for classify\n";
    return kInputError;
  }
  if (info->parsed()) return cmd_info(cfg);
  if (classify->parsed()) return cmd_classify(cfg);
  if (reduce->parsed()) return cmd_reduce(cfg);
  if (corpus->parsed()) return cmd_corpus(cfg);
  return cmd_check(cfg);
}
