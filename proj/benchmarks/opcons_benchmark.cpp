/*
   Copyright 2026 The opcons Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "opcons/conservation.hpp"
#include "opcons/diffop.hpp"
#include "opcons/numlab.hpp"
#include "opcons/random.hpp"
#include "opcons/syntax.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace {

using namespace opcons;

std::vector<DiffOp> sample_operators(unsigned max_order, std::size_t count) {
  RandomShape shape;
  shape.symbols = {"A", "B"};
  shape.max_order = max_order;
  std::vector<DiffOp> ops;
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng = derive_stream(42, t);
    ops.push_back(random_diffop(rng, shape));
  }
  return ops;
}

void BM_Collapse(benchmark::State& state) {
  const auto ops = sample_operators(static_cast<unsigned>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(collapse(ops[i++ % ops.size()]));
}
BENCHMARK(BM_Collapse)->Arg(4)->Arg(8)->Arg(16);

void BM_Symbol(benchmark::State& state) {
  const auto ops = sample_operators(static_cast<unsigned>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(symbol(ops[i++ % ops.size()]));
}
BENCHMARK(BM_Symbol)->Arg(4)->Arg(8)->Arg(16);

void BM_Compose(benchmark::State& state) {
  const auto ops = sample_operators(static_cast<unsigned>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(ops[i % ops.size()], ops[(i + 1) % ops.size()]));
    ++i;
  }
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(4)->Arg(8);

void BM_Classify(benchmark::State& state) {
  const auto ops = sample_operators(8, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify(ops[i++ % ops.size()]));
}
BENCHMARK(BM_Classify);

void BM_QuadExpectation(benchmark::State& state) {
  const auto ops = sample_operators(8, 16);
  const Binding b{{"A", Rational(3, 2)}, {"B", Rational(-1, 5)}};
  const GridSpec g(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(quad_expectation(ops[i++ % ops.size()], WaveSpec(), b, g));
}
BENCHMARK(BM_QuadExpectation)->Arg(32)->Arg(64)->Arg(128);

void BM_ParsePrint(benchmark::State& state) {
  std::vector<std::string> texts;
  for (const DiffOp& p : sample_operators(8, 64)) texts.push_back(print_operator(p));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(print_operator(parse_operator(texts[i++ % texts.size()])));
}
BENCHMARK(BM_ParsePrint);

}  // namespace

BENCHMARK_MAIN();
