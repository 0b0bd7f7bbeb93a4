// micro-benchmarks for the paths that dominate scans and table generation:
// the bound functions, the scan loop, the matrix-pipeline conditional, and the
// closed-form spin probabilities against their matrix equivalent.

#include <benchmark/benchmark.h>

#include <cmath>

#include "qbayes/conditional.hpp"
#include "qbayes/mesons.hpp"
#include "qbayes/qlinalg.hpp"
#include "qbayes/spinpair.hpp"

namespace {

using namespace qbayes;

constexpr double pi = 3.14159265358979323846;

void bm_f_function(benchmark::State& state) {
  const MesonParams bs = builtin_scenarios().at("Bs");
  const double t = 20.0 / bs.gamma_mean;
  for (auto _ : state) benchmark::DoNotOptimize(f_function(1, t, bs));
}
BENCHMARK(bm_f_function);

void bm_violation_scan(benchmark::State& state) {
  const MesonParams bs = builtin_scenarios().at("Bs");
  for (auto _ : state) {
    const ScanResult scan = violation_scan(1, bs, 30.0, 601);
    benchmark::DoNotOptimize(scan.violation_intervals.size());
  }
}
BENCHMARK(bm_violation_scan);

void bm_von_neumann_conditional(benchmark::State& state) {
  const StateVector psi = singlet_state(Direction{0.0, 0.0});
  const ComplexOperator rho0 = projector(psi);
  const ComplexOperator event = projector(
      tensor(spin_state(Direction{pi / 2.0, 0.0}, Sign::plus),
             spin_state(Direction{0.0, 0.0}, Sign::plus)));
  for (auto _ : state)
    benchmark::DoNotOptimize(von_neumann_conditional(rho0, rho0, event).value);
}
BENCHMARK(bm_von_neumann_conditional);

void bm_spin_margin_closed_form(benchmark::State& state) {
  const SpinCase c{Sign::plus, Sign::plus};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        spin_inequality_margin(c, pi / 2.0, PrecessionPhase{-pi / 8.0}).margin);
}
BENCHMARK(bm_spin_margin_closed_form);

void bm_spin_probability_matrix_pipeline(benchmark::State& state) {
  const Direction a{pi / 2.0, 0.0}, b{0.0, 0.0};
  const PrecessionPhase phase{-pi / 8.0};
  const StateVector chi =
      tensor(evolved_spin_state(Particle::electron, a, Sign::plus, phase),
             evolved_spin_state(Particle::positron, b, Sign::plus, phase));
  const ComplexOperator rho_chi = projector(chi);
  const ComplexOperator event =
      projector(tensor(spin_state(a, Sign::plus), spin_state(b, Sign::plus)));
  for (auto _ : state)
    benchmark::DoNotOptimize(von_neumann_conditional(rho_chi, rho_chi, event).value);
}
BENCHMARK(bm_spin_probability_matrix_pipeline);

void bm_static_probability(benchmark::State& state) {
  const MixingCoefficients mix = mixing_from_params(builtin_scenarios().at("Bs"));
  const MesonEvent event{MesonBasis::cp_even, MesonBasis::mass_heavy};
  for (auto _ : state) benchmark::DoNotOptimize(static_probability(event, mix));
}
BENCHMARK(bm_static_probability);

}  // namespace

BENCHMARK_MAIN();
