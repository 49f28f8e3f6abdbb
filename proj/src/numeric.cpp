#include "revbound/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace revbound {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(const std::vector<Complex>& entries, const char* what) {
  for (const Complex& z : entries) {
    if (!finite(z)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void require_same_dim(std::size_t a, std::size_t b, const std::string& what) {
  if (a != b) {
    throw std::invalid_argument(what + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require_finite(entries_, "CVector");
}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("CMatrix: entry count " + std::to_string(entries_.size()) +
                                " does not match dim " + std::to_string(dim_));
  }
  require_finite(entries_, "CMatrix");
}

Complex inner(const CVector& v, const CVector& w) {
  require_same_dim(v.dim(), w.dim(), "inner");
  Complex s{};
  for (std::size_t k = 0; k < v.dim(); ++k) s += std::conj(v[k]) * w[k];
  return s;
}

double norm(const CVector& v) {
  Complex s{};
  for (std::size_t k = 0; k < v.dim(); ++k) s += std::conj(v[k]) * v[k];
  const double re = s.real();
  if (std::abs(s.imag()) > Tolerances{}.arithmetic * (1.0 + re)) {
    throw std::runtime_error("norm: imaginary residue of <v|v> exceeds tolerance");
  }
  return std::sqrt(std::max(re, 0.0));
}

CVector matvec(const CMatrix& m, const CVector& v) {
  require_same_dim(m.dim(), v.dim(), "matvec");
  CVector r(v.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Complex s{};
    for (std::size_t k = 0; k < m.dim(); ++k) s += m.at(j, k) * v[k];
    r[j] = s;
  }
  return r;
}

double hermiticity_defect(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    for (std::size_t k = 0; k < m.dim(); ++k) {
      worst = std::max(worst, std::abs(m.at(j, k) - std::conj(m.at(k, j))));
    }
  }
  return worst;
}

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

CMatrix identity_matrix(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) m.at(j, j) = 1.0;
  return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matmul");
  const std::size_t d = a.dim();
  CMatrix r(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t l = 0; l < d; ++l) {
      const Complex ajl = a.at(j, l);
      for (std::size_t k = 0; k < d; ++k) r.at(j, k) += ajl * b.at(l, k);
    }
  }
  return r;
}

CVector operator+(const CVector& v, const CVector& w) {
  require_same_dim(v.dim(), w.dim(), "vector add");
  CVector r(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) r[k] = v[k] + w[k];
  return r;
}

CVector operator-(const CVector& v, const CVector& w) {
  require_same_dim(v.dim(), w.dim(), "vector sub");
  CVector r(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) r[k] = v[k] - w[k];
  return r;
}

CVector operator*(const Complex& c, const CVector& v) {
  CVector r(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) r[k] = c * v[k];
  return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix add");
  CMatrix r(a.dim());
  for (std::size_t k = 0; k < a.entries().size(); ++k) r.at(k / a.dim(), k % a.dim()) = a.entries()[k] + b.entries()[k];
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix sub");
  CMatrix r(a.dim());
  for (std::size_t k = 0; k < a.entries().size(); ++k) r.at(k / a.dim(), k % a.dim()) = a.entries()[k] - b.entries()[k];
  return r;
}

CMatrix operator*(double c, const CMatrix& a) {
  CMatrix r(a.dim());
  for (std::size_t k = 0; k < a.entries().size(); ++k) r.at(k / a.dim(), k % a.dim()) = c * a.entries()[k];
  return r;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (j != k) s += std::norm(a.at(j, k));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary is
//   U[p][p] = c, U[p][q] = s, U[q][p] = -conj(s), U[q][q] = c
// with c real, s = t*c*phase, phase = a(p,q)/|a(p,q)|, and t the
// smaller-magnitude root of |b| t^2 - (a_pp - a_qq) t - |b| = 0.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex b = a.at(p, q);
  const double babs = std::abs(b);
  if (babs < 1e-300) {
    a.at(p, q) = a.at(q, p) = 0.0;
    return;
  }
  const Complex phase = b / babs;
  const double app = a.at(p, p).real();
  const double aqq = a.at(q, q).real();
  const double theta = (app - aqq) / (2.0 * babs);
  const double t = (theta >= 0.0) ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                                  : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex s = t * c * phase;
  const Complex sbar = std::conj(s);

  const double c2 = c * c;
  a.at(p, p) = c2 * (app + t * t * aqq - 2.0 * t * babs);
  a.at(q, q) = c2 * (aqq + t * t * app + 2.0 * t * babs);
  a.at(p, q) = a.at(q, p) = 0.0;

  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a.at(k, p);
    const Complex akq = a.at(k, q);
    a.at(k, p) = c * akp - sbar * akq;
    a.at(k, q) = s * akp + c * akq;
    a.at(p, k) = std::conj(a.at(k, p));
    a.at(q, k) = std::conj(a.at(k, q));
  }
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const Complex vkp = v.at(k, p);
    const Complex vkq = v.at(k, q);
    v.at(k, p) = c * vkp - sbar * vkq;
    v.at(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const CMatrix& m, const Tolerances& tol) {
  if (m.dim() == 0) throw std::invalid_argument("eig_hermitian: empty matrix");
  const double defect = hermiticity_defect(m);
  if (defect > tol.structural) {
    throw std::invalid_argument("eig_hermitian: hermiticity defect " + format_number(defect) +
                                " exceeds tolerance");
  }

  const std::size_t d = m.dim();
  // symmetrize exactly so rotations preserve Hermiticity bit-for-bit
  CMatrix a(d);
  for (std::size_t j = 0; j < d; ++j) {
    a.at(j, j) = m.at(j, j).real();
    for (std::size_t k = j + 1; k < d; ++k) {
      const Complex h = 0.5 * (m.at(j, k) + std::conj(m.at(k, j)));
      a.at(j, k) = h;
      a.at(k, j) = std::conj(h);
    }
  }
  CMatrix v = identity_matrix(d);

  const double stop = 1e-14 * (1.0 + frobenius_norm(a));
  const int max_sweeps = 60;
  bool converged = off_diagonal_norm(a) <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= stop;
  }
  if (!converged) throw std::runtime_error("eig_hermitian: Jacobi sweep did not converge");

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a.at(i, i).real() < a.at(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.reserve(d);
  out.eigenvectors.reserve(d);
  for (std::size_t col : order) {
    out.eigenvalues.push_back(a.at(col, col).real());
    CVector vec(d);
    for (std::size_t k = 0; k < d; ++k) vec[k] = v.at(k, col);
    // phase convention: largest-magnitude entry real and nonnegative
    std::size_t imax = 0;
    for (std::size_t k = 1; k < d; ++k)
      if (std::abs(vec[k]) > std::abs(vec[imax])) imax = k;
    const double zmag = std::abs(vec[imax]);
    if (zmag > 0.0) {
      const Complex rot = std::conj(vec[imax]) / zmag;
      for (std::size_t k = 0; k < d; ++k) vec[k] *= rot;
    }
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace revbound
