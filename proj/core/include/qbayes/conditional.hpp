#pragma once

// Conditional probabilities in the von Neumann / Lueders sense,
//   w(B|A) = Tr(pB pA rho0 pA pB) / Tr(pA rho0 pA),
// plus the static Bayes-consistency residual and the time-dependent
// inequality margin built from such probabilities.

#include "qbayes/errors.hpp"
#include "qbayes/qlinalg.hpp"

namespace qbayes {

// denominator floor below which a conditioning event counts as impossible
inline constexpr double k_condition_threshold = 1e-12;

// tolerated numerical overshoot outside [0,1] before a value is declared a bug
inline constexpr double k_probability_slack = 1e-12;

struct ConditionalProbability {
  double value = 0.0;  // in [0,1]
};

// both sides of the static consistency equality; a realistic (classical) model
// forces residual = 0, quantum states generally do not
struct BayesResidual {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
};

// rhs - lhs of the time-dependent inequality; margin < 0 means violation
struct InequalityMargin {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs

  bool violated() const { return margin < 0.0; }
};

// normalized projector plus the weight that scales it back to pEvent|psi><psi|pEvent;
// the pair represents the conditioned (collapsed) state and its probability
struct WeightedProjector {
  ComplexOperator projector;
  double weight = 0.0;
};

// w(B|A) for state rho0. The squared-denominator form is used so that scaling
// pA by any positive factor cancels exactly; for a true projector it equals
// Tr(pA rho0). Throws zero_condition when the denominator falls below the
// threshold, internal_check_failure if the ratio lands outside [0,1] by more
// than the slack; otherwise the result is clipped to [0,1].
ConditionalProbability von_neumann_conditional(const ComplexOperator& rho0,
                                               const ComplexOperator& pA,
                                               const ComplexOperator& pB);

// collapse of a pure state by a rank-1 event projector:
// weight = ||pEvent|psi>||^2, projector = the normalized direction of pEvent|psi>
WeightedProjector intersection_projector(const StateVector& rho0_vector,
                                         const ComplexOperator& pEvent);

// lhs = w(S1|S3) w(S2|S1^S3), rhs = w(S2|S3) w(S1|S2^S3)
BayesResidual static_bayes_residual(ConditionalProbability w_s1_s3,
                                    ConditionalProbability w_s2_given_s1s3,
                                    ConditionalProbability w_s2_s3,
                                    ConditionalProbability w_s1_given_s2s3);

// lhs = w(S1|S3) w(S2|S1^S3), rhs = w(S2|S3); margin = rhs - lhs
InequalityMargin dynamic_bayes_margin(ConditionalProbability w_s1_s3,
                                      ConditionalProbability w_s2_given_s1s3,
                                      ConditionalProbability w_s2_s3);

}  // namespace qbayes
