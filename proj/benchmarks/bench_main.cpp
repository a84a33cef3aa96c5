#include <benchmark/benchmark.h>

#include "prism/concurrency/cnf.hpp"
#include "prism/dsl/parser.hpp"
#include "prism/laws/checker.hpp"

using namespace prism;

namespace {

void BM_compose_exhaustive_pairs(benchmark::State& state) {
  const StateSpace two({"a", "b"});
  const auto programs = enumerate_programs(two);
  for (auto _ : state) {
    for (const auto& p : programs)
      for (const auto& q : programs) benchmark::DoNotOptimize(compose(p, q));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 64 * 64);
}
BENCHMARK(BM_compose_exhaustive_pairs);

void BM_check_law_compose_assoc(benchmark::State& state) {
  for (auto _ : state) {
    const LawReport report = check_law("Compose_assoc", {.space_size = 2});
    benchmark::DoNotOptimize(report.universe.cases);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 64 * 64 * 64);
}
BENCHMARK(BM_check_law_compose_assoc);

void BM_conc_expansion(benchmark::State& state) {
  const StateSpace s({"x"});
  Environment env;
  env.space = s;
  const auto n = static_cast<std::size_t>(state.range(0));
  Expr left = exprs::basic_ref("skip");
  Expr right = exprs::basic_ref("fail");
  for (std::size_t i = 1; i < n; ++i) {
    left = exprs::seq(std::move(left), exprs::basic_ref("skip"));
    right = exprs::seq(std::move(right), exprs::basic_ref("fail"));
  }
  for (auto _ : state) {
    const Cnf merged = conc(left, right, env);
    benchmark::DoNotOptimize(merged.sums.size());
  }
}
BENCHMARK(BM_conc_expansion)->Arg(3)->Arg(5)->Arg(7);

void BM_parse_loop_file(benchmark::State& state) {
  const std::string source =
      "space {0, 1, 2, 3}\n"
      "cond positive = {1, 2, 3}\n"
      "prog dec = prog(pre: {1, 2, 3}, post: {1 -> 0, 2 -> 1, 3 -> 2})\n"
      "main = from skip until not positive loop dec end\n";
  for (auto _ : state) {
    const ParseResult r = parse_source(source);
    benchmark::DoNotOptimize(r.main.has_value());
  }
}
BENCHMARK(BM_parse_loop_file);

void BM_while_loop_denotation(benchmark::State& state) {
  const StateSpace four({"0", "1", "2", "3"});
  const Condition positive = Condition::of(four, {"1", "2", "3"});
  const Program dec = make_program(
      four, positive, Relation::of(four, {{"1", "0"}, {"2", "1"}, {"3", "2"}}));
  for (auto _ : state) benchmark::DoNotOptimize(while_loop(positive, dec));
}
BENCHMARK(BM_while_loop_denotation);

}  // namespace

BENCHMARK_MAIN();
