#include "coplan/extract.hpp"
#include "coplan/generator.hpp"
#include "coplan/solver.hpp"

#include <benchmark/benchmark.h>

using namespace coplan;

namespace {

std::vector<ProblemInstance> instances(Category c) {
  GenerationConfig config = GenerationConfig::defaults(c);
  config.count = 30;
  config.seed = 11;
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < config.count; ++i) out.push_back(generate_prototype(config, i).instance);
  return out;
}

void BM_Solve(benchmark::State& state) {
  const auto insts = instances(static_cast<Category>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_optimal(insts[i++ % insts.size()]));
  state.SetLabel(state.range(0) == 0 ? "short" : "long");
}

void BM_Oracle(benchmark::State& state) {
  const auto insts = instances(static_cast<Category>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(insts[i++ % insts.size()]));
  state.SetLabel(state.range(0) == 0 ? "short" : "long");
}

void BM_Generate(benchmark::State& state) {
  const GenerationConfig config = GenerationConfig::defaults(static_cast<Category>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_prototype(config, i++ % config.count));
  state.SetLabel(state.range(0) == 0 ? "short" : "long");
}

void BM_Extract(benchmark::State& state) {
  const std::string text =
      "Agent1 can start Task A at 01:00 GMT and finish by 03:00. After the break, Task B runs 06:00-07:00, "
      "and Task C waits for Agent2 at 14:00. The final answer is \\boxed{2014-12-17 15:00 GMT}.";
  const Instant start = parse_instant("2014-12-17 00:00");
  for (auto _ : state) benchmark::DoNotOptimize(extract_answer(text, Category::Short, start));
}

} // namespace

static_assert(static_cast<int>(Category::Short) == 0 && static_cast<int>(Category::Long) == 1);

BENCHMARK(BM_Solve)->Arg(0)->Arg(1);
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1);
BENCHMARK(BM_Generate)->Arg(0)->Arg(1);
BENCHMARK(BM_Extract);
BENCHMARK_MAIN();
