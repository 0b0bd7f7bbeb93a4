#include "qbayes/conditional.hpp"

#include <cmath>
#include <string>

namespace qbayes {

namespace {

double checked_probability(double value, const char* what) {
  if (value < -k_probability_slack || value > 1.0 + k_probability_slack)
    throw internal_check_failure(std::string(what) + " outside [0,1]: " + std::to_string(value));
  if (value < 0.0) return 0.0;
  if (value > 1.0) return 1.0;
  return value;
}

void require_probability_input(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0))
    throw invalid_parameter(std::string(what) + " must lie in [0,1], got " + std::to_string(value));
}

}  // namespace

ConditionalProbability von_neumann_conditional(const ComplexOperator& rho0,
                                               const ComplexOperator& pA,
                                               const ComplexOperator& pB) {
  if (pA.dim() != rho0.dim() || pB.dim() != rho0.dim())
    throw invalid_dimension("conditional probability dimension mismatch");

  // both traces are of hermitian positive products, so the imaginary parts are
  // pure rounding noise; the squared form makes a scale factor on pA cancel
  const double den = trace_product({pA, rho0, pA}).real();
  if (den < k_condition_threshold)
    throw zero_condition("conditioning event has vanishing probability");
  const double num = trace_product({pB, pA, rho0, pA, pB}).real();

  return ConditionalProbability{checked_probability(num / den, "conditional probability")};
}

WeightedProjector intersection_projector(const StateVector& rho0_vector,
                                         const ComplexOperator& pEvent) {
  const StateVector collapsed = apply(pEvent, rho0_vector);
  const double weight = norm_squared(collapsed);
  if (weight < k_condition_threshold)
    throw zero_condition("event projector annihilates the state");
  return WeightedProjector{projector(collapsed), weight};
}

BayesResidual static_bayes_residual(ConditionalProbability w_s1_s3,
                                    ConditionalProbability w_s2_given_s1s3,
                                    ConditionalProbability w_s2_s3,
                                    ConditionalProbability w_s1_given_s2s3) {
  require_probability_input(w_s1_s3.value, "w(S1|S3)");
  require_probability_input(w_s2_given_s1s3.value, "w(S2|S1^S3)");
  require_probability_input(w_s2_s3.value, "w(S2|S3)");
  require_probability_input(w_s1_given_s2s3.value, "w(S1|S2^S3)");

  BayesResidual out;
  out.lhs = w_s1_s3.value * w_s2_given_s1s3.value;
  out.rhs = w_s2_s3.value * w_s1_given_s2s3.value;
  out.residual = out.lhs - out.rhs;
  return out;
}

InequalityMargin dynamic_bayes_margin(ConditionalProbability w_s1_s3,
                                      ConditionalProbability w_s2_given_s1s3,
                                      ConditionalProbability w_s2_s3) {
  require_probability_input(w_s1_s3.value, "w(S1|S3)");
  require_probability_input(w_s2_given_s1s3.value, "w(S2|S1^S3)");
  require_probability_input(w_s2_s3.value, "w(S2|S3)");

  InequalityMargin out;
  out.lhs = w_s1_s3.value * w_s2_given_s1s3.value;
  out.rhs = w_s2_s3.value;
  out.margin = out.rhs - out.lhs;
  return out;
}

}  // namespace qbayes
