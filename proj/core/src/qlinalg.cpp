#include "qbayes/qlinalg.hpp"

#include <cmath>
#include <cstddef>

namespace qbayes {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4)
    throw invalid_dimension("dimension must be 2 or 4, got " + std::to_string(dim));
}

void check_finite(const complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw invalid_parameter("non-finite amplitude");
}

}  // namespace

StateVector::StateVector(int dim) {
  check_dim(dim);
  amp.assign(static_cast<std::size_t>(dim), complex{0.0, 0.0});
}

StateVector::StateVector(std::initializer_list<complex> amps) {
  check_dim(static_cast<int>(amps.size()));
  amp.assign(amps);
  for (const auto& z : amp) check_finite(z);
}

ComplexOperator::ComplexOperator(int dim) : dim_(dim) {
  check_dim(dim);
  m.assign(static_cast<std::size_t>(dim) * dim, complex{0.0, 0.0});
}

StateVector tensor(const StateVector& particle2, const StateVector& particle1) {
  if (particle2.dim() != 2 || particle1.dim() != 2)
    throw invalid_dimension("tensor expects two 2-component states");
  StateVector out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.amp[static_cast<std::size_t>(2 * i + j)] = particle2.amp[i] * particle1.amp[j];
  return out;
}

complex inner(const StateVector& bra, const StateVector& ket) {
  if (bra.dim() != ket.dim()) throw invalid_dimension("inner product dimension mismatch");
  complex s{0.0, 0.0};
  for (int k = 0; k < bra.dim(); ++k) s += std::conj(bra.amp[k]) * ket.amp[k];
  return s;
}

double norm_squared(const StateVector& v) { return inner(v, v).real(); }

StateVector normalized(const StateVector& v) {
  const double n2 = norm_squared(v);
  if (n2 < k_structure_tol) throw degenerate_state("cannot normalize a zero vector");
  StateVector out = v;
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : out.amp) z *= scale;
  return out;
}

ComplexOperator projector(const StateVector& v) {
  const double n2 = norm_squared(v);
  if (n2 < k_structure_tol) throw degenerate_state("projector onto a zero vector");
  ComplexOperator p(v.dim());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j)
      p.at(i, j) = v.amp[i] * std::conj(v.amp[j]) / n2;
  return p;
}

ComplexOperator identity(int dim) {
  ComplexOperator id(dim);
  for (int i = 0; i < dim; ++i) id.at(i, i) = complex{1.0, 0.0};
  return id;
}

complex trace_product(const std::vector<ComplexOperator>& ops) {
  if (ops.empty()) throw invalid_parameter("trace_product of an empty list");
  const int dim = ops.front().dim();
  for (const auto& op : ops)
    if (op.dim() != dim) throw invalid_dimension("trace_product dimension mismatch");

  // fold the product left to right, then take the trace
  ComplexOperator acc = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) {
    ComplexOperator next(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        complex s{0.0, 0.0};
        for (int l = 0; l < dim; ++l) s += acc.at(i, l) * ops[k].at(l, j);
        next.at(i, j) = s;
      }
    acc = next;
  }
  complex tr{0.0, 0.0};
  for (int i = 0; i < dim; ++i) tr += acc.at(i, i);
  return tr;
}

StateVector apply(const ComplexOperator& op, const StateVector& v) {
  if (op.dim() != v.dim()) throw invalid_dimension("apply dimension mismatch");
  StateVector out(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    complex s{0.0, 0.0};
    for (int j = 0; j < v.dim(); ++j) s += op.at(i, j) * v.amp[j];
    out.amp[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

bool is_projector(const ComplexOperator& p, double tol) {
  const int dim = p.dim();
  // hermitian
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (std::abs(p.at(i, j) - std::conj(p.at(j, i))) > tol) return false;
  // idempotent
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      complex s{0.0, 0.0};
      for (int l = 0; l < dim; ++l) s += p.at(i, l) * p.at(l, j);
      if (std::abs(s - p.at(i, j)) > tol) return false;
    }
  return true;
}

bool is_density(const ComplexOperator& rho, double tol) {
  const int dim = rho.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (std::abs(rho.at(i, j) - std::conj(rho.at(j, i))) > tol) return false;
  complex tr{0.0, 0.0};
  for (int i = 0; i < dim; ++i) tr += rho.at(i, i);
  return std::abs(tr - complex{1.0, 0.0}) <= tol;
}

}  // namespace qbayes
