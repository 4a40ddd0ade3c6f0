// Microbenchmarks for the hot paths: compiling witness terms, running the
// coherence audit, and strictifying shapes. Dimensions are kept moderate so
// a full run stays in the low seconds.

#include <benchmark/benchmark.h>

#include "rigcat/backend.hpp"
#include "rigcat/coherence.hpp"
#include "rigcat/parse.hpp"
#include "rigcat/strictify.hpp"

namespace {

using namespace rigcat;

Env benchEnv(std::size_t dim) {
  Env e;
  e.bind("A", defaultAtoms("A", dim, 1));
  e.bind("B", defaultAtoms("B", dim, -1));
  e.bind("C", defaultAtoms("C", dim, 2));
  return e;
}

void compileDistributed(benchmark::State& state) {
  WitnessRef t = parseTerm("(dL[A,B+C,C] ; (dL[A,B,C] + id[A*C])) ; aP[A*B,A*C,A*C]");
  Env e = benchEnv(static_cast<std::size_t>(state.range(0)));
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile(t, e, cfg));
  }
}
BENCHMARK(compileDistributed)->Arg(2)->Arg(4)->Arg(8);

void auditOneLaw(benchmark::State& state) {
  LawSpec law = *findLaw("dist-interchange");
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit(law, cfg, state.range(0), 7, 4));
  }
}
BENCHMARK(auditOneLaw)->Arg(10)->Arg(100);

void auditEverything(benchmark::State& state) {
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(auditAll(cfg, state.range(0), 7, 4));
  }
}
BENCHMARK(auditEverything)->Arg(25);

void strictifyWide(benchmark::State& state) {
  ShapeRef s = parseShape("((A+B)*(C+A))*((B+C)+(A*B))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(compareStrategies(s));
  }
}
BENCHMARK(strictifyWide);

void denoteWide(benchmark::State& state) {
  ShapeRef s = parseShape("((A+B)*(C+A))*(B+C)");
  Env e = benchEnv(static_cast<std::size_t>(state.range(0)));
  BackendConfig cfg;
  cfg.phaseOrder = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(denote(s, e, cfg));
  }
}
BENCHMARK(denoteWide)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
