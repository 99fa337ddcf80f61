#include <benchmark/benchmark.h>

#include "amrkit/beam_search.hpp"
#include "generators.hpp"

namespace {

using namespace amrkit;

void BM_BeamSearch(benchmark::State& state) {
  Rng rng(4);
  std::vector<std::string> tokens;
  for (int i = 0; i < 30; ++i) tokens.push_back("t" + std::to_string(i));
  const kd::Vocabulary vocab(tokens);
  const kd::Sentence x = {"a", "b", "c"};
  const auto model = testing::peaked_toy_model(rng, vocab, {x}, 24);
  const auto beam = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kd::beam_search(model, x, beam, 24));
}
BENCHMARK(BM_BeamSearch)->Arg(1)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
