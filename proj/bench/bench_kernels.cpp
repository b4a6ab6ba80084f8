// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "cherednik/pbw.hpp"
#include "cherednik/rng.hpp"
#include "cherednik/twist.hpp"

using namespace cherednik;

namespace {

struct Inputs {
  AlgebraPtr alg;
  std::vector<std::pair<PBWElement, PBWElement>> pairs;
};

Inputs make_inputs(const GroupSpec& spec, int terms) {
  Inputs in{Algebra::create(spec, AlgebraKind::rational), {}};
  Rng rng(2024);
  for (int k = 0; k < 8; ++k)
    in.pairs.emplace_back(random_element(in.alg, rng, RandomElementOptions{3, terms}),
                          random_element(in.alg, rng, RandomElementOptions{3, terms}));
  // fill the straightening table once so both variants read the same cache
  for (const auto& [a, b] : in.pairs) multiply_serial(a, b);
  return in;
}

// range(0) is the number of terms per factor.
template <PBWElement (*Op)(const PBWElement&, const PBWElement&)>
void run(benchmark::State& state) {
  const Inputs in = make_inputs(GroupSpec{4, 2, 3}, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& [a, b] : in.pairs) benchmark::DoNotOptimize(Op(a, b));
}

}  // namespace

BENCHMARK(run<multiply>)->Name("multiply/parallel")->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(run<multiply_serial>)->Name("multiply/serial")->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(run<star>)->Name("star/parallel")->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(run<star_serial>)->Name("star/serial")->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
