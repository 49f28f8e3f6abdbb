#pragma once

// Shared fixtures for the test suite: Pauli matrices, named states, and
// small random-input helpers.

#include "revbound/numeric.hpp"
#include "revbound/observables.hpp"
#include "revbound/sampling.hpp"

namespace testsupport {

using revbound::CMatrix;
using revbound::Complex;
using revbound::CVector;

inline const Complex I{0.0, 1.0};

inline CMatrix sigma_x() {
  CMatrix m(2);
  m.at(0, 1) = m.at(1, 0) = 1.0;
  return m;
}

inline CMatrix sigma_y() {
  CMatrix m(2);
  m.at(0, 1) = -I;
  m.at(1, 0) = I;
  return m;
}

inline CMatrix sigma_z() {
  CMatrix m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

inline revbound::Observable obs_x() { return {sigma_x(), "sx"}; }
inline revbound::Observable obs_y() { return {sigma_y(), "sy"}; }
inline revbound::Observable obs_z() { return {sigma_z(), "sz"}; }

inline revbound::State ket0() {
  CVector v(2);
  v[0] = 1.0;
  return revbound::State(std::move(v));
}

inline revbound::State ket_plus() {
  CVector v(2);
  v[0] = v[1] = 1.0 / std::sqrt(2.0);
  return revbound::State(std::move(v));
}

inline CVector random_vector(std::size_t dim, std::uint64_t seed) {
  revbound::Rng rng(seed);
  CVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = Complex(rng.next_normal(), rng.next_normal());
  return v;
}

}  // namespace testsupport
