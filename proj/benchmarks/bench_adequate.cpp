#include <random>  // for mt19937_64
#include <vector>  // for vector

#include <benchmark/benchmark.h>

#include "adequate/algebra.hpp"
#include "adequate/canonical.hpp"
#include "adequate/pruning.hpp"
#include "adequate/random.hpp"
#include "adequate/term.hpp"

using namespace adequate;

namespace {
  std::vector<SigmaTree> sample(std::size_t max_edges, std::size_t count) {
    std::mt19937_64        rng(max_edges);
    std::vector<SigmaTree> trees;
    for (std::size_t i = 0; i < count; ++i) {
      trees.push_back(
          random_tree(rng, max_edges, {"a", "b"}, Sidedness::two_sided));
    }
    return trees;
  }
}  // namespace

static void bm_prune(benchmark::State& state) {
  auto        trees = sample(state.range(0), 64);
  std::size_t i     = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prune(trees[i++ % trees.size()]));
  }
}
BENCHMARK(bm_prune)->RangeMultiplier(2)->Range(8, 128);

static void bm_canonical_form(benchmark::State& state) {
  auto        trees = sample(state.range(0), 64);
  std::size_t i     = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(trees[i++ % trees.size()]));
  }
}
BENCHMARK(bm_canonical_form)->RangeMultiplier(2)->Range(8, 128);

static void bm_pruned_multiply(benchmark::State& state) {
  std::vector<SigmaTree> trees;
  for (auto const& x : sample(state.range(0), 64)) {
    trees.push_back(prune(x));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pruned_multiply(trees[i % trees.size()],
                                             trees[(i + 1) % trees.size()]));
    ++i;
  }
}
BENCHMARK(bm_pruned_multiply)->RangeMultiplier(2)->Range(8, 64);

static void bm_words_equal(benchmark::State& state) {
  AlgebraMode const mode{Sidedness::left, Unit::monoid};
  std::mt19937_64   rng(7);
  std::vector<std::string> words;
  for (int i = 0; i < 64; ++i) {
    words.push_back(
        print_term(random_term(rng, state.range(0), {"a", "b"}, mode)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(words_equal(
        words[i % words.size()], words[(i + 1) % words.size()], mode));
    ++i;
  }
}
BENCHMARK(bm_words_equal)->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
