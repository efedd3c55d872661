// Microbenchmarks for the hot paths: CON scoring, PageRank iteration, walk
// generation, skip-gram training, and logistic fitting.

#include <benchmark/benchmark.h>

#include "hoopsnet/centrality.hpp"
#include "hoopsnet/linkpred.hpp"
#include "hoopsnet/logistic.hpp"
#include "hoopsnet/seeds.hpp"
#include "hoopsnet/skipgram.hpp"
#include "hoopsnet/synth.hpp"
#include "hoopsnet/walks.hpp"

namespace {

hoopsnet::WeightedDigraph planted_graph(int nodes) {
  hoopsnet::PlantedAffinityModel model;
  model.num_nodes = nodes;
  model.num_communities = 4;
  model.p_in = 0.3;
  model.p_out = 0.02;
  model.seed = 12;
  return hoopsnet::generate_planted(model).graph;
}

void BM_ConScores(benchmark::State& state) {
  auto g = planted_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoopsnet::con_scores(g, true));
  }
}
BENCHMARK(BM_ConScores)->Arg(64)->Arg(256)->Arg(1024);

void BM_PageRank(benchmark::State& state) {
  auto g = planted_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoopsnet::pagerank_adversarial(g));
  }
}
BENCHMARK(BM_PageRank)->Arg(64)->Arg(256)->Arg(1024);

void BM_GenerateWalks(benchmark::State& state) {
  auto g = planted_graph(static_cast<int>(state.range(0)));
  hoopsnet::WalkConfig cfg;
  cfg.walk_length = 40;
  cfg.walks_per_node = 5;
  cfg.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoopsnet::generate_walks(g, cfg));
  }
}
BENCHMARK(BM_GenerateWalks)->Arg(64)->Arg(256);

void BM_TrainSkipgram(benchmark::State& state) {
  auto g = planted_graph(64);
  hoopsnet::WalkConfig wcfg;
  wcfg.walk_length = 40;
  wcfg.walks_per_node = 5;
  wcfg.seed = 3;
  auto walks = hoopsnet::generate_walks(g, wcfg);
  hoopsnet::TrainConfig tcfg;
  tcfg.dimensions = static_cast<int>(state.range(0));
  tcfg.window = 5;
  tcfg.epochs = 1;
  tcfg.seed = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoopsnet::train_skipgram(walks, g.num_nodes(), tcfg));
  }
}
BENCHMARK(BM_TrainSkipgram)->Arg(16)->Arg(64)->Arg(128);

void BM_FitLogistic(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t k = 20;
  hoopsnet::DesignMatrix d;
  d.n = n;
  d.k = k;
  d.values.resize(n * k);
  d.labels.resize(n);
  std::mt19937_64 rng(8);
  for (auto& v : d.values) v = hoopsnet::rand_unit(rng) * 2 - 1;
  for (std::size_t i = 0; i < n; ++i) {
    d.labels[i] = hoopsnet::rand_unit(rng) < 0.5 ? 0 : 1;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hoopsnet::fit_logistic(d));
  }
}
BENCHMARK(BM_FitLogistic)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
