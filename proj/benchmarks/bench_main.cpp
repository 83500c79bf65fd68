#include <benchmark/benchmark.h>

#include "intclos/catalog.hpp"
#include "intclos/closure.hpp"
#include "intclos/grobner.hpp"
#include "intclos/modtools.hpp"
#include "intclos/multiplicity.hpp"

using namespace intclos;

namespace {

void BM_GroebnerMaxIdealPower(benchmark::State& state) {
  auto r = make_ring({"x", "y", "z"});
  Ideal i = maximal_ideal_power(r, static_cast<unsigned>(state.range(0)));
  // perturb by a common cubic term so the input is not already a basis
  auto xyz = parse_poly("x*y*z", r);
  std::vector<Polynomial> gens;
  for (const auto& g : i.gens()) gens.push_back(g + xyz);
  Ideal shifted(r, gens);
  for (auto _ : state) benchmark::DoNotOptimize(GroebnerBasis::compute(shifted).size());
}
BENCHMARK(BM_GroebnerMaxIdealPower)->Arg(2)->Arg(3)->Arg(4);

void BM_GroebnerModule(benchmark::State& state) {
  auto e = find_example(state.range(0) == 0 ? "exidcd" : "deKod");
  auto r = e.ring();
  auto m = e.module(r);
  for (auto _ : state) benchmark::DoNotOptimize(GroebnerBasis::compute(m).size());
}
BENCHMARK(BM_GroebnerModule)->Arg(0)->Arg(1);

void BM_Syzygies(benchmark::State& state) {
  auto e = find_example("CMnotID");
  auto r = e.ring();
  auto m = e.module(r);
  for (auto _ : state) benchmark::DoNotOptimize(z_module(m).cols());
}
BENCHMARK(BM_Syzygies);

void BM_LocalColengthIdeal(benchmark::State& state) {
  auto r = make_ring({"x", "y"});
  auto k = state.range(0);
  Ideal i = Ideal::parse({"x^" + std::to_string(k) + " + y^" + std::to_string(k + 1), "x*y^" + std::to_string(k)}, r);
  for (auto _ : state) benchmark::DoNotOptimize(local_colength(i).value());
}
BENCHMARK(BM_LocalColengthIdeal)->Arg(3)->Arg(6)->Arg(10);

void BM_LocalColengthModule(benchmark::State& state) {
  auto e = find_example("deKod");
  auto r = e.ring();
  auto m = e.module(r);
  for (auto _ : state) benchmark::DoNotOptimize(local_colength(m).value());
}
BENCHMARK(BM_LocalColengthModule);

void BM_BuchsbaumRimGeneric(benchmark::State& state) {
  auto e = find_example("CMnotID");
  auto r = e.ring();
  auto m = e.module(r);
  auto ml = project_rows(m, lambda_set(m).front());
  for (auto _ : state) benchmark::DoNotOptimize(buchsbaum_rim(ml).value);
}
BENCHMARK(BM_BuchsbaumRimGeneric);

void BM_ClosureViaMinors(benchmark::State& state) {
  auto e = find_example("deKod");
  auto r = e.ring();
  auto m = e.module(r);
  auto k = e.ideal("K", r);
  for (auto _ : state) benchmark::DoNotOptimize(closure_via_minors(m, k).generators.cols());
}
BENCHMARK(BM_ClosureViaMinors);

}  // namespace

BENCHMARK_MAIN();
