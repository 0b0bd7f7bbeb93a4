#pragma once

// Dense complex vectors and operators for two-level systems and pairs of them.
// Dimensions are restricted to 2 (one particle) and 4 (a pair).
//
// Index conventions used by every module built on top of this one:
//   dim 2: index 0 is the "+" component (spin up / flavour M),
//          index 1 is the "-" component (spin down / flavour Mbar);
//   dim 4: the product ket |x(2)>|y(1)> sits at index 2*i + j, where i is the
//          component index of particle (2) and j that of particle (1).

#include <complex>
#include <initializer_list>
#include <vector>

#include "qbayes/errors.hpp"

namespace qbayes {

using complex = std::complex<double>;

// tolerance for the structural checks below (hermiticity, idempotence, unit trace)
inline constexpr double k_structure_tol = 1e-12;

struct StateVector {
  explicit StateVector(int dim);
  StateVector(std::initializer_list<complex> amps);

  int dim() const { return static_cast<int>(amp.size()); }

  std::vector<complex> amp;
};

// row-major square matrix, dim x dim
struct ComplexOperator {
  explicit ComplexOperator(int dim);

  int dim() const { return dim_; }
  complex& at(int i, int j) { return m[static_cast<std::size_t>(i) * dim_ + j]; }
  const complex& at(int i, int j) const { return m[static_cast<std::size_t>(i) * dim_ + j]; }

  int dim_ = 0;
  std::vector<complex> m;
};

// |a(2)> |b(1)> -> dim-4 product vector at index 2*i + j
StateVector tensor(const StateVector& particle2, const StateVector& particle1);

// <bra|ket> with the bra conjugated
complex inner(const StateVector& bra, const StateVector& ket);

// <v|v>, real and nonnegative
double norm_squared(const StateVector& v);

// v / ||v||; throws degenerate_state on a numerically zero vector
StateVector normalized(const StateVector& v);

// |v><v| / <v|v>: always a true rank-1 projector regardless of input scale;
// throws degenerate_state on a zero vector
ComplexOperator projector(const StateVector& v);

ComplexOperator identity(int dim);

// Re-free trace of the ordered product ops[0] ops[1] ... ops[n-1];
// throws invalid_parameter on an empty list, invalid_dimension on a mismatch
complex trace_product(const std::vector<ComplexOperator>& ops);

// op |v>
StateVector apply(const ComplexOperator& op, const StateVector& v);

// structural predicates, used by tests and internal sanity checks
bool is_projector(const ComplexOperator& p, double tol = k_structure_tol);
bool is_density(const ComplexOperator& rho, double tol = k_structure_tol);

}  // namespace qbayes
