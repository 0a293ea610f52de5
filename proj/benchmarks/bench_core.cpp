#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "netclass/classify.hpp"
#include "netclass/generators.hpp"
#include "netclass/image_features.hpp"
#include "netclass/metrics.hpp"
#include "netclass/ordering.hpp"
#include "netclass/rng.hpp"

namespace {

using namespace netclass;

Graph ba_graph(std::size_t n, std::uint64_t seed = 3) {
  GenSpec spec;
  spec.model = Model::barabasi_albert;
  spec.n = n;
  spec.k_bar = 8;
  spec.seed = seed;
  return generate(spec);
}

void BM_Generate(benchmark::State& state, Model model) {
  GenSpec spec;
  spec.model = model;
  spec.n = static_cast<std::size_t>(state.range(0));
  spec.k_bar = 8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(spec));
    ++spec.seed;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Generate, er, Model::erdos_renyi)->Arg(500)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, ws, Model::watts_strogatz)->Arg(500)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, ba, Model::barabasi_albert)->Arg(500)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, geo, Model::geographic)->Arg(500)->Arg(2000);
BENCHMARK_CAPTURE(BM_Generate, dm, Model::dorogovtsev_mendes)->Arg(500)->Arg(2000);

void BM_Betweenness(benchmark::State& state) {
  const Graph g = ba_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->Arg(250)->Arg(500)->Arg(1000)->Complexity();

void BM_StructuralFeatures(benchmark::State& state) {
  const Graph g = ba_graph(500);
  for (auto _ : state) benchmark::DoNotOptimize(structural_features(g, all_metrics()));
}
BENCHMARK(BM_StructuralFeatures);

void BM_SortedAdjacency(benchmark::State& state) {
  const Graph g = ba_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sorted_adjacency(g));
}
BENCHMARK(BM_SortedAdjacency)->Arg(500)->Arg(1000);

void BM_Clbp(benchmark::State& state) {
  const BinaryMatrix image = sorted_adjacency(ba_graph(500));
  for (auto _ : state) benchmark::DoNotOptimize(clbp_features(image));
}
BENCHMARK(BM_Clbp);

void BM_Hu(benchmark::State& state) {
  const BinaryMatrix image = sorted_adjacency(ba_graph(500));
  for (auto _ : state) benchmark::DoNotOptimize(hu_moments(image));
}
BENCHMARK(BM_Hu);

LabeledDataset blob_dataset(std::size_t per_class, std::size_t dim) {
  Rng rng(11);
  std::vector<FeatureVector> rows;
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < per_class; ++i) {
      FeatureVector v{"bench", "c" + std::to_string(c), {}};
      for (std::size_t d = 0; d < dim; ++d) v.values.push_back(static_cast<double>(c) + rng.uniform());
      rows.push_back(std::move(v));
    }
  }
  return LabeledDataset(std::move(rows));
}

void BM_EvaluateKnn(benchmark::State& state) {
  const LabeledDataset data = blob_dataset(100, static_cast<std::size_t>(state.range(0)));
  ClassifierSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(data, spec, 10, 7));
}
BENCHMARK(BM_EvaluateKnn)->Arg(7)->Arg(200)->Arg(2500);

void BM_EvaluateSvm(benchmark::State& state) {
  const LabeledDataset data = blob_dataset(100, 200);
  ClassifierSpec spec;
  spec.kind = ClassifierKind::svm;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(data, spec, 10, 7));
}
BENCHMARK(BM_EvaluateSvm);

}  // namespace

BENCHMARK_MAIN();
