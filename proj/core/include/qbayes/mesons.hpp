#pragma once

// Neutral pseudoscalar meson mixing: flavour / CP / mass eigenbases, the
// mixing coefficients p and q, the oscillation amplitudes g+-(tau), the
// time-independent and time-dependent pair probabilities, the eight bound
// functions F_1..F_8 of the time-dependent consistency inequality, the static
// consistency residuals, and violation scanning over dimensionless lifetime
// z = Gamma*t.
//
// Sign convention throughout: delta_gamma = Gamma_H - Gamma_L, which is the
// OPPOSITE of the PDG definition; all shipped parameter sets and the config
// file use this convention. Internally everything is in 1/s; the MeV entry
// points convert via hbar.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qbayes/errors.hpp"
#include "qbayes/qlinalg.hpp"
#include "qbayes/scan.hpp"

namespace qbayes {

inline constexpr double k_hbar_mev_s = 6.582119569e-22;       // MeV s
inline constexpr double k_speed_of_light_mm_s = 2.99792458e11;  // mm / s

struct MesonParams {
  std::string name;          // K, D, Bs, or a custom label
  double delta_gamma = 0.0;  // Gamma_H - Gamma_L, 1/s (sign convention above)
  double delta_m = 0.0;      // M_H - M_L, 1/s (hbar = 1)
  double gamma_mean = 0.0;   // (Gamma_H + Gamma_L)/2, 1/s
  double r = 1.0;            // |q/p|
  double zeta = 0.0;         // arg(q/p), radians
};

// gamma_mean > 0, both partial widths >= 0, r > 0, everything finite;
// throws invalid_parameter otherwise
void validate(const MesonParams& params);

// same fields with delta_gamma, delta_m, gamma_mean in MeV and zeta in degrees
MesonParams make_params_mev(const std::string& name, double delta_gamma_mev,
                            double delta_m_mev, double gamma_mean_mev, double r,
                            double zeta_deg);

struct MixingCoefficients {
  complex p{1.0, 0.0};
  complex q{0.0, 0.0};
};

// p = cos(beta) real positive, q = sin(beta) e^{i zeta} with beta = arctan(r),
// so q/p = r e^{i zeta} and |p|^2 + |q|^2 = 1
MixingCoefficients mixing_from_params(const MesonParams& params);

// the six basis states of the three dichotomic observables
enum class MesonBasis {
  flavour,      // M
  antiflavour,  // Mbar
  cp_even,      // M1
  cp_odd,       // M2
  mass_light,   // ML
  mass_heavy,   // MH
};

// short printable label: M, Mbar, M1, M2, ML, MH
const char* basis_label(MesonBasis b);

// one-per-particle joint event; particle2/particle1 follow the tensor index
// convention of qlinalg
struct MesonEvent {
  MesonBasis particle2 = MesonBasis::flavour;
  MesonBasis particle1 = MesonBasis::flavour;
};

// basis state in the flavour representation; alpha is the unobservable
// relative phase between M and Mbar, kept as an argument only so tests can
// verify that no probability depends on it
StateVector meson_state(MesonBasis b, const MixingCoefficients& mix, double alpha = 0.0);

// (1/sqrt2)(|M(2)>|Mbar(1)> - |Mbar(2)>|M(1)>)
StateVector meson_singlet();

// oscillation amplitude pair at proper time tau >= 0, with the overall mass
// phase e^{-i(m_H+m_L)tau/2} dropped:
//   g+- = (1/2)(e^{-i dM tau/2 - G_H tau/2} +- e^{+i dM tau/2 - G_L tau/2})
struct GPair {
  complex g_plus{1.0, 0.0};
  complex g_minus{0.0, 0.0};
};
GPair g_functions(double tau, const MesonParams& params);

// probability of the joint event in the singlet at t0. Supported events pair
// two DIFFERENT observables (flavour/CP/mass); the order of the two members is
// immaterial by the antisymmetry of the singlet. Unsupported pairs throw
// unsupported_event.
double static_probability(const MesonEvent& event, const MixingCoefficients& mix);

// the twelve single-meson transition / pair-survival probabilities
enum class Transition {
  m1_to_m1,
  m1_to_m2,
  m2_to_m1,
  m2_to_m2,
  m_to_m,
  m_to_mbar,
  mbar_to_m,
  mbar_to_mbar,
  // joint probability that one meson is found as M1/M2 while the other is
  // still M/Mbar at time t: (1/4) e^{-2 Gamma t} for all four combinations
  pair_m1_m,
  pair_m1_mbar,
  pair_m2_m,
  pair_m2_mbar,
};
double transition_probability(Transition kind, double t, const MesonParams& params);

// F_N(t), N in 1..8; realism predicts F_N <= 1, so F_N > 1 is a violation.
// F_N(0) = 1 for every N.
double f_function(int index, double t, const MesonParams& params);

// |1 +- p/q|^2 - 2; realism predicts 0
enum class EqualityVariant { plus, minus };
double static_equality_residual(EqualityVariant variant, const MixingCoefficients& mix);

// 2 ln 3 / |delta_gamma|, seconds; past this time the inequality for the
// leading event set is violated regardless of the oscillation phase;
// throws invalid_parameter when delta_gamma = 0
double guaranteed_violation_time(const MesonParams& params);

// samples F_index over z in [0, z_max] on n_points points (z = Gamma*t) and
// reports the regions where F > 1, crossings bisected to k_crossing_tol
ScanResult violation_scan(int index, const MesonParams& params, double z_max,
                          int n_points);

// the twelve joint event sets with the bound function governing each,
// in the canonical listing order
struct EventFIndex {
  MesonEvent event;
  int f_index = 0;
};
const std::vector<EventFIndex>& event_f_table();

// parameter sets as used for the published curves: Bs, K, D (measured r),
// D-figure (illustrative r = 1.1). Keyed by name.
const std::map<std::string, MesonParams>& builtin_scenarios();

// loads named scenarios from a JSON config holding MeV values and zeta in
// degrees (same schema as the shipped scenarios.json); every set is validated
std::map<std::string, MesonParams> load_scenarios(const std::string& path);

}  // namespace qbayes
