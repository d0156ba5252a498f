#include <benchmark/benchmark.h>

#include "adenewton/cli/parser.hpp"
#include "adenewton/solver.hpp"

using namespace adenewton;

namespace {

const Field H = Field::h_type();

DiffPoly running() { return cli::parse_poly("Y^2 + t*Y + t^3", H); }

void BM_SeriesProduct(benchmark::State& state) {
  const Series a = cli::parse_series("1 + t + 2*t^2 + 3*t^3 + 5*t^4 + 8*t^5 + 13*t^6", H);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesProduct);

void BM_AdditiveConjugate(benchmark::State& state) {
  const DiffPoly p = cli::parse_poly("Y*Y'' + (Y')^3 - t*Y^2 + t^3", H);
  const Series a = cli::parse_series("-t + t^2 - t^(5/2)", H);
  for (auto _ : state) benchmark::DoNotOptimize(p.add_conjugate(a));
}
BENCHMARK(BM_AdditiveConjugate);

void BM_NewtonDiagram(benchmark::State& state) {
  const DiffPoly p = cli::parse_poly("Y^4 + t*Y^2*Y' - t^(1/2)*Y^2 + t^3*Y' + t^5", H);
  for (auto _ : state) benchmark::DoNotOptimize(newton_diagram(p, EConstraint::all()));
}
BENCHMARK(BM_NewtonDiagram);

void BM_Equalizer(benchmark::State& state) {
  const DiffPoly p = cli::parse_poly("Y*Y'' + t*(Y')^2", H);
  const DiffPoly q = cli::parse_poly("t^(2/3)*Y'", H);
  for (auto _ : state) benchmark::DoNotOptimize(equalizer(p, q));
}
BENCHMARK(BM_Equalizer);

void BM_SolveRunningExample(benchmark::State& state) {
  const ADE eq(running(), EConstraint::val_ge(GroupElement::scalar(Rational(0))));
  const GroupElement target = GroupElement::scalar(Rational(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(eq, target));
}
BENCHMARK(BM_SolveRunningExample)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
