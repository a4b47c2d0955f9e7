#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "fracterm/normality.hpp"
#include "fracterm/rewrite.hpp"
#include "fracterm/semantics.hpp"
#include "fracterm/shape.hpp"
#include "fracterm/syntax.hpp"
#include "support/term_gen.hpp"

using namespace fracterm;

namespace {

std::vector<Term> sample_terms(int depth, int count = 256) {
  testgen::TermGen gen(1234);
  std::vector<Term> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.term(depth));
  return out;
}

void BM_Parse(benchmark::State& state) {
  std::vector<std::string> texts;
  for (const Term& t : sample_terms(static_cast<int>(state.range(0)))) texts.push_back(format(t));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse(texts[i++ % texts.size()]));
  }
}
BENCHMARK(BM_Parse)->Arg(3)->Arg(5)->Arg(7);

void BM_Flatten(benchmark::State& state) {
  const auto terms = sample_terms(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flatten(terms[i++ % terms.size()]));
  }
}
BENCHMARK(BM_Flatten)->Arg(3)->Arg(5)->Arg(7);

void BM_Eval(benchmark::State& state) {
  const auto terms = sample_terms(5);
  const EvalConfig config{Policy::common_meadow, kAllShapes[static_cast<std::size_t>(state.range(0))], {}};
  state.SetLabel(std::string(to_string(config.shape)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(terms[i++ % terms.size()], config));
  }
}
BENCHMARK(BM_Eval)->Arg(7)->Arg(8)->Arg(9);

void BM_VonNeumannCompare(benchmark::State& state) {
  const Integer k = state.range(0);
  const Instance a = encode(k, ShapeId::nat_vn);
  const Instance b = encode(k, ShapeId::nat_vn);
  for (auto _ : state) {
    benchmark::DoNotOptimize(label_eq(a, b));
  }
}
BENCHMARK(BM_VonNeumannCompare)->Arg(16)->Arg(256)->Arg(4096);

void BM_VonNeumannAdd(benchmark::State& state) {
  const Integer k = state.range(0);
  const Instance a = encode(k, ShapeId::nat_vn);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shape_add(a, a));
  }
}
BENCHMARK(BM_VonNeumannAdd)->Arg(16)->Arg(256);

void BM_Normality(benchmark::State& state) {
  const ShapeId shape = kAllShapes[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(to_string(shape)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_normality(shape, 20));
  }
}
BENCHMARK(BM_Normality)->Arg(1)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
