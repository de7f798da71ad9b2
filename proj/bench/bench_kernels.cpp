// Serial reference against the OpenMP kernels on the three hot paths.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "corrcast/fixtures.hpp"
#include "corrcast/mincut.hpp"
#include "corrcast/setfunc.hpp"
#include "corrcast/simulator.hpp"

using namespace corrcast;

namespace {

// Layered network: `sources` sources feeding three relay layers of width 6, two sinks.
Network layered(std::size_t sources) {
  std::mt19937_64 rng(17);
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::vector<std::size_t> src, snk, prev;
  for (std::size_t i = 0; i < sources; ++i) {
    src.push_back(nodes.size());
    prev.push_back(nodes.size());
    nodes.push_back("s" + std::to_string(i + 1));
  }
  auto capacity = [&] { return ExtRational(Rational(static_cast<long>(1 + rng() % 8), 2)); };
  for (int layer = 0; layer < 3; ++layer) {
    std::vector<std::size_t> next;
    for (int k = 0; k < 6; ++k) {
      next.push_back(nodes.size());
      nodes.push_back("v" + std::to_string(layer) + "_" + std::to_string(k));
    }
    for (auto u : prev)
      for (auto v : next)
        if (rng() % 2 == 0) edges.push_back({u, v, capacity()});
    prev = next;
  }
  for (int t = 0; t < 2; ++t) {
    snk.push_back(nodes.size());
    nodes.push_back("t" + std::to_string(t + 1));
    for (auto u : prev) edges.push_back({u, snk.back(), capacity()});
  }
  return Network(std::move(nodes), std::move(edges), std::move(src), std::move(snk));
}

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void capacity_profile_kernel(benchmark::State& state) {
  const Network net = layered(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(capacity_profile(net, mode(state)));
}
BENCHMARK(capacity_profile_kernel)->ArgsProduct({{0, 1}, {6, 10}})->Unit(benchmark::kMillisecond);

void polymatroid_kernel(benchmark::State& state) {
  const SetFunction f = capacity_profile(layered(static_cast<std::size_t>(state.range(1)))).network_wide;
  for (auto _ : state) benchmark::DoNotOptimize(is_polymatroid(f, 0, mode(state)));
}
BENCHMARK(polymatroid_kernel)->ArgsProduct({{0, 1}, {8, 10}})->Unit(benchmark::kMillisecond);

void estimate_error_kernel(benchmark::State& state) {
  SimParams p;
  p.n = static_cast<std::size_t>(state.range(1));
  p.trials = 200;
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_error(fixtures::butterfly(), fixtures::uniform_pair(), p, mode(state)));
}
BENCHMARK(estimate_error_kernel)->ArgsProduct({{0, 1}, {4, 8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
