#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "chordenum/chordal_system.hpp"
#include "chordenum/completion.hpp"
#include "chordenum/engine.hpp"
#include "chordenum/graph.hpp"

namespace {

using namespace chordenum;

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

void BM_IsChordal(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const Completion full = Completion::full(g);
  const Graph h = full.to_graph();
  for (auto _ : state) benchmark::DoNotOptimize(is_chordal(h));
}
BENCHMARK(BM_IsChordal)->Arg(16)->Arg(64)->Arg(256);

void BM_DelFromClique(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const Completion full = Completion::full(g);
  for (auto _ : state) benchmark::DoNotOptimize(del(full));
}
BENCHMARK(BM_DelFromClique)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalOrdering(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const Completion root = del(Completion::full(g));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_ordering(root));
}
BENCHMARK(BM_CanonicalOrdering)->Arg(8)->Arg(16)->Arg(32);

void BM_Succ(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const Completion root = del(Completion::full(g));
  const std::vector<EdgePair> fill = root.edges();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(succ(root, fill[i]));
    i = (i + 1) % fill.size();
  }
}
BENCHMARK(BM_Succ)->Arg(8)->Arg(16)->Arg(32);

void BM_Parent(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const ChordalCompletionSystem sys(g);
  std::vector<Completion> sample;
  enumerate_reverse_search(sys, [&](const Completion& f) {
    if (!(f == sys.root())) sample.push_back(f);
    return sample.size() < 64;
  });
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parent(sys, sample[i]));
    i = (i + 1) % sample.size();
  }
}
BENCHMARK(BM_Parent)->Arg(8)->Arg(10)->Arg(12);

void BM_Children(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const ChordalCompletionSystem sys(g);
  for (auto _ : state) benchmark::DoNotOptimize(children(sys, sys.root()));
}
BENCHMARK(BM_Children)->Arg(8)->Arg(10)->Arg(12);

void BM_ReverseSearchCycle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const ChordalCompletionSystem sys(g);
  std::size_t solutions = 0;
  for (auto _ : state) solutions = enumerate_reverse_search(sys, [](const Completion&) {});
  state.counters["solutions"] = static_cast<double>(solutions);
  state.counters["per_solution"] =
      benchmark::Counter(static_cast<double>(solutions), benchmark::Counter::kIsIterationInvariantRate |
                                                             benchmark::Counter::kInvert);
}
BENCHMARK(BM_ReverseSearchCycle)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

void BM_VisitedSetCycle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  const ChordalCompletionSystem sys(g);
  std::size_t solutions = 0;
  for (auto _ : state) solutions = enumerate_visited_set(sys, [](const Completion&) {});
  state.counters["solutions"] = static_cast<double>(solutions);
}
BENCHMARK(BM_VisitedSetCycle)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

void BM_ReverseSearchRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 11);
  const ChordalCompletionSystem sys(g);
  std::size_t solutions = 0;
  for (auto _ : state) solutions = enumerate_reverse_search(sys, [](const Completion&) {});
  state.counters["solutions"] = static_cast<double>(solutions);
}
BENCHMARK(BM_ReverseSearchRandom)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
