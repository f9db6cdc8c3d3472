#include <benchmark/benchmark.h>

#include "nusp/compiler.hpp"
#include "nusp/oracle.hpp"
#include "nusp/runtime.hpp"

namespace {

// Splicing closure on generated instances, the hot loop of every run.
void BM_SpliceAll(benchmark::State& state) {
  nusp::InstanceParams params;
  params.max_set_size = static_cast<std::size_t>(state.range(0));
  nusp::SigmaInstance inst = nusp::make_instance(params, 0);
  for (auto _ : state) {
    auto out = nusp::splice_all(inst.rules, inst.words);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SpliceAll)->Arg(4)->Arg(8)->Arg(16);

void BM_NaiveSpliceAll(benchmark::State& state) {
  nusp::InstanceParams params;
  params.max_set_size = static_cast<std::size_t>(state.range(0));
  nusp::SigmaInstance inst = nusp::make_instance(params, 0);
  for (auto _ : state) {
    auto out = nusp::naive_splice_all(inst.rules, inst.words);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_NaiveSpliceAll)->Arg(4)->Arg(8)->Arg(16);

nusp::TuringMachine even_as_machine() {
  using namespace nusp;
  TuringMachine m;
  m.states = {"e", "o", "qacc"};
  Symbol a = Symbol::intern("a");
  Symbol b = Symbol::intern("b");
  Symbol blank = Symbol::intern("B");
  m.input_alphabet = {a, b};
  m.tape_alphabet = {a, b, blank};
  m.blank = blank;
  m.initial_state = "e";
  m.accepting = {"qacc"};
  m.transitions = {
      {"e", a, "o", a, HeadMove::right},  {"o", a, "e", a, HeadMove::right},
      {"e", b, "e", b, HeadMove::right},  {"o", b, "o", b, HeadMove::right},
      {"e", blank, "qacc", blank, HeadMove::right},
  };
  return m;
}

void BM_CompiledRun(benchmark::State& state) {
  nusp::TuringMachine m = even_as_machine();
  nusp::CompiledNetwork cn = nusp::compile(m);
  nusp::Word input = nusp::Word::tokens("a b a b a a");
  nusp::RunLimits limits;
  for (auto _ : state) {
    auto result = nusp::run(cn.network, input, limits);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_CompiledRun);

void BM_Compile(benchmark::State& state) {
  nusp::TuringMachine m = even_as_machine();
  for (auto _ : state) {
    auto cn = nusp::compile(m);
    benchmark::DoNotOptimize(cn);
  }
}
BENCHMARK(BM_Compile);

}  // namespace

BENCHMARK_MAIN();
