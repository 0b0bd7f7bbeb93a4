#include "qbayes/spinpair.hpp"

#include <cmath>
#include <string>

namespace qbayes {

namespace {

constexpr double k_pi = 3.14159265358979323846;

void check_direction(const Direction& n) {
  if (!std::isfinite(n.theta) || !std::isfinite(n.phi))
    throw invalid_parameter("direction angles must be finite");
  if (n.theta < -1e-12 || n.theta > k_pi + 1e-12)
    throw invalid_parameter("theta must lie in [0, pi], got " + std::to_string(n.theta));
  if (n.phi < -k_pi - 1e-12 || n.phi > k_pi + 1e-12)
    throw invalid_parameter("phi must lie in [-pi, pi], got " + std::to_string(n.phi));
}

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw invalid_parameter(std::string(what) + " must be finite");
}

// planar rotation of the two complex components by angle a
StateVector rotate_components(const StateVector& v, double a) {
  const double c = std::cos(a), s = std::sin(a);
  return StateVector{c * v.amp[0] - s * v.amp[1], s * v.amp[0] + c * v.amp[1]};
}

}  // namespace

StateVector spin_state(const Direction& n, Sign sign) {
  check_direction(n);
  const double ch = std::cos(n.theta / 2.0), sh = std::sin(n.theta / 2.0);
  const complex em = std::polar(1.0, -n.phi / 2.0);  // e^{-i phi/2}
  const complex ep = std::polar(1.0, +n.phi / 2.0);
  if (sign == Sign::plus) return StateVector{ch * em, sh * ep};
  return StateVector{-sh * em, ch * ep};
}

StateVector singlet_state(const Direction& n) {
  const StateVector plus = spin_state(n, Sign::plus);
  const StateVector minus = spin_state(n, Sign::minus);
  const StateVector up_down = tensor(plus, minus);    // |n+(2)>|n-(1)>
  const StateVector down_up = tensor(minus, plus);
  StateVector out(4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 4; ++k)
    out.amp[static_cast<std::size_t>(k)] = inv_sqrt2 * (up_down.amp[k] - down_up.amp[k]);
  return out;
}

StateVector evolved_spin_state(Particle particle, const Direction& n, Sign sign,
                               PrecessionPhase phase) {
  check_finite(phase.omega_t, "omega_t");
  const StateVector at_rest = spin_state(n, sign);
  // electron precesses one way, positron the other
  const double angle = (particle == Particle::electron) ? phase.omega_t : -phase.omega_t;
  return rotate_components(at_rest, angle);
}

double larmor_frequency(double field_strength, double mass, double charge_magnitude) {
  check_finite(field_strength, "field");
  check_finite(mass, "mass");
  check_finite(charge_magnitude, "charge");
  if (field_strength < 0.0) throw invalid_parameter("field strength must be nonnegative");
  if (mass <= 0.0) throw invalid_parameter("mass must be positive");
  if (charge_magnitude <= 0.0) throw invalid_parameter("charge magnitude must be positive");
  return charge_magnitude * field_strength / (2.0 * mass);
}

ConditionalProbability static_conditional(double theta_ab) {
  check_finite(theta_ab, "theta_ab");
  const double s = std::sin(theta_ab / 2.0);
  return ConditionalProbability{0.5 * s * s};
}

double static_equality_gap(double theta_ab, double theta_bc) {
  check_finite(theta_ab, "theta_ab");
  check_finite(theta_bc, "theta_bc");
  const double sa = std::sin(theta_ab / 2.0), sc = std::sin(theta_bc / 2.0);
  return sa * sa - sc * sc;
}

CaseProbabilities case_probabilities(SpinCase c, double theta_ba, PrecessionPhase phase) {
  check_finite(theta_ba, "theta_ba");
  check_finite(phase.omega_t, "omega_t");
  const double half = theta_ba / 2.0 + 2.0 * phase.omega_t;
  const double swt = std::sin(phase.omega_t), cwt = std::cos(phase.omega_t);

  CaseProbabilities out;
  if (c.alpha_sign == c.beta_sign) {
    const double s = std::sin(half);
    out.w_s2_s3 = 0.5 * s * s;
    const double f = (c.alpha_sign == Sign::plus) ? cwt : swt;
    out.w_s2_given_s1s3 = f * f * f * f;
  } else {
    const double co = std::cos(half);
    out.w_s2_s3 = 0.5 * co * co;
    out.w_s2_given_s1s3 = swt * swt * cwt * cwt;
  }
  return out;
}

InequalityMargin spin_inequality_margin(SpinCase c, double theta_ba, PrecessionPhase phase) {
  const CaseProbabilities probs = case_probabilities(c, theta_ba, phase);
  return dynamic_bayes_margin(static_conditional(theta_ba),
                              ConditionalProbability{probs.w_s2_given_s1s3},
                              ConditionalProbability{probs.w_s2_s3});
}

}  // namespace qbayes
