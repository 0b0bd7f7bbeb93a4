#pragma once

#include <stdexcept>

namespace qbayes {

// caller handed us a vector/operator of the wrong size
struct invalid_dimension : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// scalar argument outside its allowed domain (negative time, r <= 0, bad index, ...)
struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// state vector is (numerically) zero where a direction is required
struct degenerate_state : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// event pair / transition label not among the supported combinations
struct unsupported_event : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// conditioning event has vanishing probability, the conditional is undefined
struct zero_condition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a computed value landed outside its mathematically guaranteed range;
// this flags a bug in the library (or broken inputs that slipped validation),
// never a legitimate physics outcome
struct internal_check_failure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qbayes
