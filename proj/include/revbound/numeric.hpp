#pragma once

// Dense complex linear algebra for small dimensions (d <= ~64).
// Self-contained: no BLAS/LAPACK, values are plain std::vector storage.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "revbound/tolerances.hpp"

namespace revbound {

using Complex = std::complex<double>;

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : entries_(dim) {}
  // Validates that every entry is finite; throws std::invalid_argument.
  explicit CVector(std::vector<Complex> entries);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t k) { return entries_[k]; }
  const Complex& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

// Square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  // Validates squareness and finiteness; throws std::invalid_argument.
  CMatrix(std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const { return dim_; }
  Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// eigenvalues ascending; eigenvectors[k] is the unit eigenvector for
// eigenvalues[k], phase-fixed so the largest-magnitude entry is real >= 0
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<CVector> eigenvectors;
};

// <v|w>, conjugate-linear in the first argument (bra-ket convention).
Complex inner(const CVector& v, const CVector& w);

// sqrt(Re<v|v>); throws if the imaginary residue of <v|v> is not negligible
double norm(const CVector& v);

CVector matvec(const CMatrix& m, const CVector& v);

// max_{j,k} |M[j][k] - conj(M[k][j])|
double hermiticity_defect(const CMatrix& m);

// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic for
// identical input. Throws std::invalid_argument when the Hermiticity defect
// exceeds tol.structural.
EigenDecomposition eig_hermitian(const CMatrix& m, const Tolerances& tol = {});

double frobenius_norm(const CMatrix& m);
CMatrix identity_matrix(std::size_t dim);
CMatrix matmul(const CMatrix& a, const CMatrix& b);

CVector operator+(const CVector& v, const CVector& w);
CVector operator-(const CVector& v, const CVector& w);
CVector operator*(const Complex& c, const CVector& v);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(double c, const CMatrix& a);

void require_same_dim(std::size_t a, std::size_t b, const std::string& what);

// "%.6g" rendering for diagnostics (std::to_string flattens small values)
std::string format_number(double x);

}  // namespace revbound
