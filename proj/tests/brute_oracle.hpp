#pragma once

// Brute-force reference arithmetic for the worked instances and cross-checks.
// Deliberately independent of the library under test: plain std::vector,
// direct formula transcription, nothing shared with include/revbound.

#include <complex>
#include <cstddef>
#include <vector>

namespace brute {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>; // row-major, square

inline C dot(const Vec& a, const Vec& b) {
  C s{};
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

inline double nrm(const Vec& a) { return std::sqrt(dot(a, a).real()); }

inline Vec mul(const Mat& m, const Vec& v) {
  Vec r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t k = 0; k < v.size(); ++k) r[j] += m[j][k] * v[k];
  return r;
}

inline Mat mmul(const Mat& a, const Mat& b) {
  const std::size_t d = a.size();
  Mat r(d, Vec(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t k = 0; k < d; ++k) r[j][k] += a[j][l] * b[l][k];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

inline Mat msub(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < a.size(); ++k) r[j][k] -= b[j][k];
  return r;
}

inline double expval(const Mat& f, const Vec& phi) { return dot(phi, mul(f, phi)).real(); }

inline double var(const Mat& f, const Vec& phi) {
  const double e = expval(f, phi);
  return expval(mmul(f, f), phi) - e * e;
}

inline C cov(const Mat& a, const Mat& b, const Vec& phi) {
  return dot(phi, mul(mmul(a, b), phi)) - C(expval(a, phi) * expval(b, phi));
}

inline C comm_exp(const Mat& a, const Mat& b, const Vec& phi) {
  return dot(phi, mul(msub(mmul(a, b), mmul(b, a)), phi));
}

struct Sides {
  double lhs, rhs;
};

inline double id1_residual(const Vec& p1, const Vec& p2) {
  const double l = nrm(p1) * nrm(p1) + nrm(p2) * nrm(p2);
  const double r = nrm(vsub(p1, p2)) * nrm(vsub(p1, p2)) + 2.0 * dot(p1, p2).real();
  return std::abs(l - r);
}

inline Sides in0(const Vec& p1, const Vec& p2) {
  const double d = nrm(vsub(p1, p2));
  return {nrm(p1) * nrm(p1) + nrm(p2) * nrm(p2), d * d + 2.0 * std::abs(dot(p1, p2))};
}

inline Sides in1(const Vec& p1, const Vec& p2) {
  const double d = nrm(vsub(p1, p2));
  return {nrm(p1) * nrm(p1) + nrm(p2) * nrm(p2), d * d + 2.0 * nrm(p1) * nrm(p2)};
}

inline Sides cs(const Vec& p1, const Vec& p2) { return {std::abs(dot(p1, p2)), nrm(p1) * nrm(p2)}; }

// lower bound: lhs >= rhs, only for nonzero vectors
inline Sides dw(const Vec& p1, const Vec& p2) {
  Vec u1 = p1, u2 = p2;
  for (auto& z : u1) z /= nrm(p1);
  for (auto& z : u2) z /= nrm(p2);
  return {nrm(vsub(p1, p2)), 0.5 * (nrm(p1) + nrm(p2)) * nrm(vsub(u1, u2))};
}

inline Sides rev_cov(const Mat& a, const Mat& b, const Vec& phi) {
  return {var(a, phi) + var(b, phi), var(msub(a, b), phi) + 2.0 * std::abs(cov(a, b, phi))};
}

inline Sides rev_prod(const Mat& a, const Mat& b, const Vec& phi) {
  return {var(a, phi) + var(b, phi),
          var(msub(a, b), phi) + 2.0 * std::sqrt(var(a, phi)) * std::sqrt(var(b, phi))};
}

// caller must ensure the product of deviations and the denominator are nonzero
inline Sides rev_dw(const Mat& a, const Mat& b, const Vec& phi) {
  const double da = std::sqrt(var(a, phi)), db = std::sqrt(var(b, phi));
  const double denom = 1.0 - cov(a, b, phi).real() / (da * db);
  return {var(a, phi) + var(b, phi), 2.0 * var(msub(a, b), phi) / denom - 2.0 * da * db};
}

// lower bound: lhs >= rhs
inline Sides robertson(const Mat& a, const Mat& b, const Vec& phi) {
  return {std::sqrt(var(a, phi)) * std::sqrt(var(b, phi)), 0.5 * std::abs(comm_exp(a, b, phi))};
}

}  // namespace brute
