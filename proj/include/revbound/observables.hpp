#pragma once

// Quantum layer over numeric: Hermitian-validated observables, normalized
// states, expectation values, deviation vectors, variance and covariance.

#include <string>

#include "revbound/numeric.hpp"
#include "revbound/tolerances.hpp"

namespace revbound {

class Observable {
 public:
  // Rejects matrices whose Hermiticity defect exceeds tol.structural.
  Observable(CMatrix matrix, std::string label, const Tolerances& tol = {});

  const CMatrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  CMatrix matrix_;
  std::string label_;
};

class State {
 public:
  // Rejects vectors with |norm - 1| > tol.structural.
  explicit State(CVector vector, const Tolerances& tol = {});
  // Rescales to unit norm; rejects vectors with norm below 1e-150.
  static State normalized(CVector vector);

  const CVector& vector() const { return vector_; }
  std::size_t dim() const { return vector_.dim(); }

 private:
  CVector vector_;
};

struct DeviationVector {
  CVector vector;  // (F - <F> I)|phi>
  std::string observable_label;
  std::string state_label;
};

// Re<phi|F|phi>. Throws when the imaginary residue exceeds
// tol.structural * (1 + ||F||_F), which signals corrupted input.
double expectation(const Observable& f, const State& phi, const Tolerances& tol = {});

DeviationVector deviation_vector(const Observable& f, const State& phi, const Tolerances& tol = {});

// ||(F - <F> I)|phi>||^2 — nonnegative by construction.
double variance(const Observable& f, const State& phi, const Tolerances& tol = {});

// <F^2> - <F>^2, the cross-check route (independent arithmetic path).
double variance_via_moments(const Observable& f, const State& phi, const Tolerances& tol = {});

double std_dev(const Observable& f, const State& phi, const Tolerances& tol = {});

// C_phi(A,B) = <phi| dA dB |phi>, generally complex.
Complex covariance(const Observable& a, const Observable& b, const State& phi,
                   const Tolerances& tol = {});

// <AB> - <A><B> via explicit matrix product, the cross-check route.
Complex covariance_via_moments(const Observable& a, const Observable& b, const State& phi,
                               const Tolerances& tol = {});

// <phi|(AB - BA)|phi>; purely imaginary for Hermitian inputs, the real
// residue is checked against tol.structural * (1 + ||A||_F ||B||_F).
Complex commutator_expectation(const Observable& a, const Observable& b, const State& phi,
                               const Tolerances& tol = {});

Observable operator+(const Observable& a, const Observable& b);
Observable operator-(const Observable& a, const Observable& b);
Observable operator*(double c, const Observable& a);

}  // namespace revbound
