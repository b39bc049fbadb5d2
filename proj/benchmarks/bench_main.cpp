#include <benchmark/benchmark.h>

#include "qortho/norms.hpp"
#include "qortho/quad.hpp"
#include "qortho/u8.hpp"

namespace {

using namespace qortho;

QParams p0() { return QParams(QBase(0.5L), 0.3L, 0.2L, 0.1L, 2.2L, 0.8L); }

void BM_QPochInf(benchmark::State& st) {
  const QBase B(0.5L);
  const Complex a(0.3L, 0.4L);
  for (auto _ : st) benchmark::DoNotOptimize(qpoch_inf(a, B).value);
}
BENCHMARK(BM_QPochInf);

void BM_Phi4_3(benchmark::State& st) {
  SeriesSpec sp;
  sp.base = QBase(0.5L);
  sp.numerator_params = {0.2L, 0.3L, Complex(0.1L, 0.2L), 0.4L};
  sp.denominator_params = {0.5L, 0.6L, 0.7L};
  sp.argument = 0.5L;
  for (auto _ : st) benchmark::DoNotOptimize(phi(sp).value);
}
BENCHMARK(BM_Phi4_3);

void BM_UNu(benchmark::State& st) {
  const QParams s = p0();
  const LatticePoint p = point_from_theta(1.1L, s.base);
  const auto rep = static_cast<Representation>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(u_nu(2.7L, p, s, rep));
}
BENCHMARK(BM_UNu)
    ->Arg(static_cast<int>(Representation::B_43pair))
    ->Arg(static_cast<int>(Representation::C_sym))
    ->Arg(static_cast<int>(Representation::Auto));

void BM_BoundaryF(benchmark::State& st) {
  const QParams s = p0();
  Real nu = 1.0L;
  for (auto _ : st) {
    benchmark::DoNotOptimize(boundary_f_value(nu, s));
    nu += 1e-3L;
  }
}
BENCHMARK(BM_BoundaryF);

void BM_OrthoIntegral(benchmark::State& st) {
  const QParams s = p0();
  QuadOptions o;
  o.threads = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ortho_integral(1.4L, 2.6L, s, o).value);
}
BENCHMARK(BM_OrthoIntegral)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
