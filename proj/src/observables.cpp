#include "revbound/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace revbound {

Observable::Observable(CMatrix matrix, std::string label, const Tolerances& tol)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
  if (matrix_.dim() == 0) throw std::invalid_argument("Observable: empty matrix");
  const double defect = hermiticity_defect(matrix_);
  if (defect > tol.structural) {
    throw std::invalid_argument("Observable '" + label_ + "': hermiticity defect " +
                                format_number(defect) + " exceeds tolerance");
  }
}

State::State(CVector vector, const Tolerances& tol) : vector_(std::move(vector)) {
  if (vector_.dim() == 0) throw std::invalid_argument("State: empty vector");
  const double n = norm(vector_);
  if (std::abs(n - 1.0) > tol.structural) {
    throw std::invalid_argument("State: norm " + format_number(n) + " is not 1 within tolerance");
  }
}

State State::normalized(CVector vector) {
  const double n = norm(vector);
  if (n < 1e-150) throw std::invalid_argument("State::normalized: vector norm is (near) zero");
  for (std::size_t k = 0; k < vector.dim(); ++k) vector[k] /= n;
  return State(std::move(vector));
}

double expectation(const Observable& f, const State& phi, const Tolerances& tol) {
  require_same_dim(f.dim(), phi.dim(), "expectation");
  const Complex z = inner(phi.vector(), matvec(f.matrix(), phi.vector()));
  if (std::abs(z.imag()) > tol.structural * (1.0 + frobenius_norm(f.matrix()))) {
    throw std::runtime_error("expectation of '" + f.label() +
                             "': imaginary residue exceeds tolerance (corrupted input?)");
  }
  return z.real();
}

DeviationVector deviation_vector(const Observable& f, const State& phi, const Tolerances& tol) {
  require_same_dim(f.dim(), phi.dim(), "deviation_vector");
  const double mean = expectation(f, phi, tol);
  CVector v = matvec(f.matrix(), phi.vector());
  for (std::size_t k = 0; k < v.dim(); ++k) v[k] -= mean * phi.vector()[k];
  return DeviationVector{std::move(v), f.label(), "phi"};
}

double variance(const Observable& f, const State& phi, const Tolerances& tol) {
  const double n = norm(deviation_vector(f, phi, tol).vector);
  return n * n;
}

double variance_via_moments(const Observable& f, const State& phi, const Tolerances& tol) {
  require_same_dim(f.dim(), phi.dim(), "variance_via_moments");
  const CVector fphi = matvec(f.matrix(), phi.vector());
  const double second = inner(fphi, fphi).real();  // <F^2> for Hermitian F
  const double mean = expectation(f, phi, tol);
  return second - mean * mean;
}

double std_dev(const Observable& f, const State& phi, const Tolerances& tol) {
  return std::sqrt(variance(f, phi, tol));
}

Complex covariance(const Observable& a, const Observable& b, const State& phi,
                   const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "covariance");
  require_same_dim(a.dim(), phi.dim(), "covariance");
  // <phi| dA dB |phi> = <dA phi | dB phi> since dA is Hermitian
  return inner(deviation_vector(a, phi, tol).vector, deviation_vector(b, phi, tol).vector);
}

Complex covariance_via_moments(const Observable& a, const Observable& b, const State& phi,
                               const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "covariance_via_moments");
  require_same_dim(a.dim(), phi.dim(), "covariance_via_moments");
  const Complex ab = inner(phi.vector(), matvec(matmul(a.matrix(), b.matrix()), phi.vector()));
  return ab - Complex(expectation(a, phi, tol) * expectation(b, phi, tol));
}

Complex commutator_expectation(const Observable& a, const Observable& b, const State& phi,
                               const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "commutator_expectation");
  require_same_dim(a.dim(), phi.dim(), "commutator_expectation");
  const CVector abphi = matvec(a.matrix(), matvec(b.matrix(), phi.vector()));
  const CVector baphi = matvec(b.matrix(), matvec(a.matrix(), phi.vector()));
  const Complex z = inner(phi.vector(), abphi - baphi);
  const double scale = 1.0 + frobenius_norm(a.matrix()) * frobenius_norm(b.matrix());
  if (std::abs(z.real()) > tol.structural * scale) {
    throw std::runtime_error("commutator_expectation: real residue exceeds tolerance");
  }
  return z;
}

Observable operator+(const Observable& a, const Observable& b) {
  return Observable(a.matrix() + b.matrix(), a.label() + "+" + b.label());
}

Observable operator-(const Observable& a, const Observable& b) {
  return Observable(a.matrix() - b.matrix(), a.label() + "-" + b.label());
}

Observable operator*(double c, const Observable& a) {
  return Observable(c * a.matrix(), std::to_string(c) + "*" + a.label());
}

}  // namespace revbound
