// netclass: generate synthetic networks, render degree-sorted adjacency
// matrices, extract descriptors and run cross-validated classification.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netclass/classify.hpp"
#include "netclass/error.hpp"
#include "netclass/generators.hpp"
#include "netclass/graph.hpp"
#include "netclass/image_features.hpp"
#include "netclass/ordering.hpp"
#include "netclass/parallel.hpp"
#include "netclass/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

struct GenOptions {
  std::string preset;
  std::string model;
  std::size_t n = 500;
  unsigned k_bar = 8;
  double alpha = 1.0;
  double beta = 0.1;
  std::optional<std::size_t> count;
  std::uint64_t seed = 0;
  fs::path out;
};

struct RenderOptions {
  fs::path graph;
  fs::path out;
  bool dilate = false;
  bool unsorted = false;
};

struct FeatureOptions {
  fs::path manifest;
  std::string extractor;
  fs::path out;
};

struct ClassifyOptions {
  fs::path features;
  std::string classifier = "knn";
  std::string extractor = "external";
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  std::size_t neighbors = 1;
  double C = 1.0;
  std::size_t epochs = netclass::SvmParams{}.epochs;
  bool standardize = false;
  std::optional<fs::path> report;
};

int cmd_generate(const GenOptions& opt, unsigned threads) {
  std::vector<netclass::GridCell> grid;
  std::size_t count = 0;
  if (!opt.preset.empty()) {
    auto p = netclass::preset(opt.preset);
    grid = std::move(p.grid);
    count = opt.count.value_or(p.count_per_cell);
  } else {
    const auto model = netclass::model_from_tag(opt.model);
    if (!model) netclass::fail(netclass::ErrorKind::invalid_argument, "unknown model '" + opt.model + "'");
    netclass::GridCell cell{*model, opt.n, opt.k_bar, opt.alpha, opt.beta, std::string(netclass::model_tag(*model))};
    grid.push_back(std::move(cell));
    count = opt.count.value_or(1);
  }
  const auto plan = netclass::plan_dataset(grid, count, opt.seed);
  const auto entries = netclass::write_dataset(plan, opt.out, threads);
  std::cout << "wrote " << entries.size() << " graphs and " << (opt.out / "manifest.csv").string() << '\n';
  return 0;
}

int cmd_render(const RenderOptions& opt, unsigned threads) {
  const auto g = netclass::read_edge_list(opt.graph);
  const auto matrix = opt.unsorted ? netclass::adjacency_matrix(g) : netclass::sorted_adjacency(g, threads);
  netclass::write_pgm(opt.out, matrix, opt.dilate);
  std::cout << "wrote " << opt.out.string() << " (" << matrix.size() << "x" << matrix.size() << ")\n";
  return 0;
}

int cmd_features(const FeatureOptions& opt, unsigned threads) {
  const auto extractor = netclass::parse_extractor(opt.extractor);
  const auto data = netclass::features_from_manifest(opt.manifest, extractor, threads);
  netclass::write_feature_csv(opt.out, data);
  std::cout << "wrote " << data.size() << " x " << data.dimension() << " features to " << opt.out.string() << '\n';
  return 0;
}

int cmd_classify(const ClassifyOptions& opt, unsigned threads) {
  netclass::ClassifierSpec spec;
  if (opt.classifier == "knn") {
    spec.kind = netclass::ClassifierKind::knn;
  } else if (opt.classifier == "svm") {
    spec.kind = netclass::ClassifierKind::svm;
  } else {
    netclass::fail(netclass::ErrorKind::invalid_argument, "unknown classifier '" + opt.classifier + "'");
  }
  spec.neighbors = opt.neighbors;
  spec.standardize = opt.standardize;
  spec.svm.C = opt.C;
  spec.svm.epochs = opt.epochs;

  const auto data = netclass::read_feature_csv(opt.features, opt.extractor);
  const auto report = netclass::evaluate(data, spec, opt.folds, opt.seed, threads);
  if (report.warning) std::cerr << "warning: " << *report.warning << '\n';

  const std::string json = netclass::report_json(report);
  if (opt.report) {
    std::ofstream out(*opt.report, std::ios::binary);
    if (!out) netclass::fail(netclass::ErrorKind::io, "cannot write " + opt.report->string());
    out << json;
  }
  std::cout << "CCR " << netclass::ccr_cell(report) << '\n' << netclass::confusion_text(report);
  if (report.auc.macro) std::cout << "macro AUC " << *report.auc.macro << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-sorted adjacency matrices for complex network classification"};
  app.require_subcommand(1);
  unsigned threads = netclass::default_thread_count();
  app.add_option("--threads", threads, "Worker threads (default: NETCLASS_THREADS or hardware)")
      ->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset (edge lists + manifest.csv)");
  auto* preset_opt = gen_cmd->add_option("--preset", gen.preset, "synthetic-desk | synthetic-full | scalefree-desk | scalefree-full");
  auto* model_opt = gen_cmd->add_option("--model", gen.model, "Single model: ER | WS | BA | GEO | DM");
  preset_opt->excludes(model_opt);
  gen_cmd->add_option("--n", gen.n, "Node count (with --model)");
  gen_cmd->add_option("--k", gen.k_bar, "Average degree (with --model)");
  gen_cmd->add_option("--alpha", gen.alpha, "Attachment exponent (BA)");
  gen_cmd->add_option("--beta", gen.beta, "Rewiring probability (WS)");
  gen_cmd->add_option("--count", gen.count, "Graphs per grid cell (overrides the preset)");
  gen_cmd->add_option("--seed", gen.seed, "Base seed");
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();

  RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "Render the sorted adjacency matrix of an edge list as PGM");
  render_cmd->add_option("graph", render.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--out", render.out, "Output .pgm path")->required();
  render_cmd->add_flag("--dilate", render.dilate, "Apply one 3x3 dilation before encoding");
  render_cmd->add_flag("--unsorted", render.unsorted, "Render the matrix in input node order");

  FeatureOptions feat;
  auto* feat_cmd = app.add_subcommand("features", "Extract one feature vector per manifest graph");
  feat_cmd->add_option("--manifest", feat.manifest, "manifest.csv")->required()->check(CLI::ExistingFile);
  feat_cmd->add_option("--extractor", feat.extractor, "projection | clbp | hu | structural:<metrics|combined>")
      ->required();
  feat_cmd->add_option("--out", feat.out, "Output feature CSV")->required();

  ClassifyOptions cls;
  auto* cls_cmd = app.add_subcommand("classify", "Stratified k-fold evaluation of a feature CSV");
  cls_cmd->add_option("--features", cls.features, "Feature CSV")->required()->check(CLI::ExistingFile);
  cls_cmd->add_option("--classifier", cls.classifier, "knn | svm");
  cls_cmd->add_option("--extractor", cls.extractor, "Extractor name recorded in the report");
  cls_cmd->add_option("--folds", cls.folds, "Cross-validation folds");
  cls_cmd->add_option("--seed", cls.seed, "Seed for folds and SVM training");
  cls_cmd->add_option("--neighbors", cls.neighbors, "k for knn")->check(CLI::PositiveNumber);
  cls_cmd->add_option("--C", cls.C, "SVM regularisation");
  cls_cmd->add_option("--epochs", cls.epochs, "SVM training epochs")->check(CLI::PositiveNumber);
  cls_cmd->add_flag("--standardize", cls.standardize, "Standardise columns before knn");
  cls_cmd->add_option("--report", cls.report, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error:usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen_cmd->parsed()) {
      if (gen.preset.empty() && gen.model.empty()) {
        netclass::fail(netclass::ErrorKind::invalid_argument, "gen needs --preset or --model");
      }
      return cmd_generate(gen, threads);
    }
    if (render_cmd->parsed()) return cmd_render(render, threads);
    if (feat_cmd->parsed()) return cmd_features(feat, threads);
    if (cls_cmd->parsed()) return cmd_classify(cls, threads);
  } catch (const netclass::Error& e) {
    std::cerr << "error:" << netclass::to_string(e.kind()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
