#include <benchmark/benchmark.h>

#include <xsdyn/xsdyn.hpp>

namespace {

using namespace xsdyn;

const DensityMatrix4& general_state() {
  static const DensityMatrix4 rho = [] {
    Mat4 m = 0.55 * werner(0.7).matrix() + 0.45 * bell_state(BellState::PsiMinus).matrix();
    m(0, 1) += cplx(0.02, 0.01);
    m(1, 0) += cplx(0.02, -0.01);
    return validate_density(m);
  }();
  return rho;
}

void BM_JacobiEigen(benchmark::State& state) {
  const Mat4 m = general_state().matrix();
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(m));
}
BENCHMARK(BM_JacobiEigen);

void BM_QrEigenvalues(benchmark::State& state) {
  const Mat4 m = general_state().matrix() * spin_flip(general_state());
  for (auto _ : state) benchmark::DoNotOptimize(qr_eigenvalues(m));
}
BENCHMARK(BM_QrEigenvalues);

void BM_QuarticEigenvalues(benchmark::State& state) {
  const Mat4 m = general_state().matrix() * spin_flip(general_state());
  for (auto _ : state) benchmark::DoNotOptimize(quartic_eigenvalues(m));
}
BENCHMARK(BM_QuarticEigenvalues);

void BM_ConcurrenceWootters(benchmark::State& state) {
  const DensityMatrix4& rho = general_state();
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_wootters(rho));
}
BENCHMARK(BM_ConcurrenceWootters);

void BM_ConcurrenceXState(benchmark::State& state) {
  const XStateView x = extract_xstate(mems_two_photon(0.4));
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_xstate(x));
}
BENCHMARK(BM_ConcurrenceXState);

void BM_AnalyticPropagator(benchmark::State& state) {
  const DensityMatrix4 rho0 = mems_two_photon(0.8);
  const CouplingParams p = coupling_params(1.0 / 6.0);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_xstate_propagate(rho0, p, t));
    t = t > 5.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_AnalyticPropagator);

void BM_Rk4Trajectory(benchmark::State& state) {
  const DensityMatrix4 rho0 = mnms_two_photon(0.6);
  const CouplingParams p = coupling_params(1.0 / 6.0);
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_rk4(rho0, p, 5.0, dt));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(5.0 / dt));
}
BENCHMARK(BM_Rk4Trajectory)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ChannelMap(benchmark::State& state) {
  const DensityMatrix4 rho0 = mems_two_photon(0.5);
  const ChannelParams params{static_cast<ChannelKind>(state.range(0)), 1.0, 2.0};
  const StateAt map = channel_state_map(rho0, params);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(map(t));
    t = t > 10.0 ? 0.0 : t + 1e-3;
  }
  state.SetLabel(to_string(params.kind));
}
BENCHMARK(BM_ChannelMap)->DenseRange(0, 2);

void BM_DetectEvents(benchmark::State& state) {
  const DensityMatrix4 rho0 = mnms_two_photon(0.6);
  const CouplingParams p = coupling_params(1.0 / 6.0);
  const Trajectory traj = evolve_rk4(rho0, p, 5.0, 1e-3);
  const ConcurrenceAt oracle = concurrence_along(analytic_state_map(rho0, p));
  for (auto _ : state) benchmark::DoNotOptimize(detect_events(traj, oracle));
}
BENCHMARK(BM_DetectEvents)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
