#include <benchmark/benchmark.h>

#include "hopfcheck/braided_tensor.hpp"
#include "hopfcheck/hopf72.hpp"

using namespace hopfcheck;

namespace {

using Q = Rational;
using P = MultiPoly;

struct Symbolic {
  std::shared_ptr<const MultiPoly::VarList> vars = MultiPoly::make_context({"a1", "a2"});
  P a1 = P::variable(vars, 0);
  P a2 = P::variable(vars, 1);
};

void BM_ReduceTopWord(benchmark::State& state) {
  auto ctx = SmashContext::v3();
  Symbolic s;
  auto rules = default_rules<P>(ctx, s.a1, s.a2);
  auto x = full_tail<P>(*ctx, ctx->parse_word("x12x13x12x23x12x13"));
  for (auto _ : state) benchmark::DoNotOptimize(rules.reduce(x));
}
BENCHMARK(BM_ReduceTopWord);

template <class S>
void structure_constants_at(benchmark::State& state, const S& a1, const S& a2) {
  auto ctx = SmashContext::v3();
  auto rules = default_rules<S>(ctx, a1, a2);
  auto words = rules.irreducible_words(8);
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(rules, words));
}

void BM_StructureConstantsRational(benchmark::State& state) { structure_constants_at<Q>(state, Q(1), Q(2)); }
BENCHMARK(BM_StructureConstantsRational)->Unit(benchmark::kMillisecond);

void BM_StructureConstantsSymbolic(benchmark::State& state) {
  Symbolic s;
  structure_constants_at<P>(state, s.a1, s.a2);
}
BENCHMARK(BM_StructureConstantsSymbolic)->Unit(benchmark::kMillisecond);

void BM_AssociativityExhaustiveSymbolic(benchmark::State& state) {
  Symbolic s;
  auto ctx = SmashContext::v3();
  auto rules = default_rules<P>(ctx, s.a1, s.a2);
  auto t = structure_constants(rules, rules.irreducible_words(8));
  for (auto _ : state) benchmark::DoNotOptimize(check_associativity(t));
}
BENCHMARK(BM_AssociativityExhaustiveSymbolic)->Unit(benchmark::kMillisecond);

void BM_Hopf72BuildSymbolic(benchmark::State& state) {
  Symbolic s;
  for (auto _ : state) benchmark::DoNotOptimize(Hopf72<P>::build(s.a1, s.a2));
}
BENCHMARK(BM_Hopf72BuildSymbolic)->Unit(benchmark::kMillisecond);

void BM_HopfAxiomsSymbolic(benchmark::State& state) {
  Symbolic s;
  auto h = Hopf72<P>::build(s.a1, s.a2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_axioms(h));
}
BENCHMARK(BM_HopfAxiomsSymbolic)->Unit(benchmark::kMillisecond);

void BM_CompletionFK4(benchmark::State& state) {
  auto v = transposition_module<Q>(4);
  auto ctx = SmashContext::free_algebra(v.labels, 16);
  auto start = relations_to_rules(ctx, quadratic_relations<Q>(4));
  for (auto _ : state) benchmark::DoNotOptimize(complete(start, 10));
}
BENCHMARK(BM_CompletionFK4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
