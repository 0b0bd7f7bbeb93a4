#pragma once

// Spin-singlet electron/positron pair precessing in a constant magnetic field
// along y. Provides the single-particle states and their precession, the
// singlet, closed-form conditional probabilities, and the margins of the
// time-dependent consistency inequality for the four measurement-outcome
// cases.
//
// Conventions: particle (2) is the electron and rotates by +omega*t, particle
// (1) is the positron and rotates by -omega*t; all measurement directions lie
// in configuration angles (theta, phi) with the closed forms valid in the
// phi = 0 plane.

#include "qbayes/conditional.hpp"
#include "qbayes/qlinalg.hpp"

namespace qbayes {

struct Direction {
  double theta = 0.0;  // polar angle, radians, [0, pi]
  double phi = 0.0;    // azimuth, radians, [-pi, pi]
};

// dimensionless precession angle omega*t
struct PrecessionPhase {
  double omega_t = 0.0;
};

enum class Sign { plus, minus };

enum class Particle {
  positron = 1,  // particle (1), rotates by -omega*t
  electron = 2,  // particle (2), rotates by +omega*t
};

// outcome signs of the time-t event: alpha_sign on axis a for particle (2),
// beta_sign on axis b for particle (1)
struct SpinCase {
  Sign alpha_sign = Sign::plus;
  Sign beta_sign = Sign::plus;
};

// the two probabilities entering the inequality for one case
struct CaseProbabilities {
  double w_s2_s3 = 0.0;           // w(S2(t)|S3)
  double w_s2_given_s1s3 = 0.0;   // w(S2(t)|S1^S3)
};

// spin-1/2 state along n: + is (cos(t/2) e^{-i phi/2}, sin(t/2) e^{+i phi/2}),
// - is the orthogonal complement
StateVector spin_state(const Direction& n, Sign sign);

// (1/sqrt2)(|n+(2)>|n-(1)> - |n-(2)>|n+(1)>); the same 4-vector for every n
StateVector singlet_state(const Direction& n);

// spin_state after precession: components rotated by R(+omega_t) for the
// electron and R(-omega_t) for the positron, with
// R(a) = [[cos a, -sin a], [sin a, cos a]] acting on the two components
StateVector evolved_spin_state(Particle particle, const Direction& n, Sign sign,
                               PrecessionPhase phase);

// omega = charge * field / (2 * mass), SI units, rad/s;
// field may be zero, mass and charge must be positive
double larmor_frequency(double field_strength, double mass, double charge_magnitude);

// w(S1|S3) = (1/2) sin^2(theta_ab / 2)
ConditionalProbability static_conditional(double theta_ab);

// sin^2(theta_ab/2) - sin^2(theta_bc/2); zero for every realistic model
double static_equality_gap(double theta_ab, double theta_bc);

// closed forms for the pair (w(S2(t)|S3), w(S2(t)|S1^S3)):
//   (+,+): ((1/2) sin^2(theta_ba/2 + 2wt), cos^4 wt)
//   (-,-): ((1/2) sin^2(theta_ba/2 + 2wt), sin^4 wt)
//   (+,-), (-,+): ((1/2) cos^2(theta_ba/2 + 2wt), sin^2 wt cos^2 wt)
CaseProbabilities case_probabilities(SpinCase c, double theta_ba, PrecessionPhase phase);

// margin = w(S2(t)|S3) - (1/2) sin^2(theta_ba/2) * w(S2(t)|S1^S3);
// negative margin = the case violates the realistic inequality
InequalityMargin spin_inequality_margin(SpinCase c, double theta_ba, PrecessionPhase phase);

}  // namespace qbayes
