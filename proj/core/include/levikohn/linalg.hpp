#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

// Small dense complex linear algebra (n <= 2 * kMaxDimension). Everything here
// is deterministic: no threading, fixed sweep orders.
namespace levikohn::linalg {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  // Columns become the given vectors (all of equal length).
  static CMatrix from_columns(const std::vector<CVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CVector column(std::size_t j) const;
  CMatrix adjoint() const;
  double frobenius_norm() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
};

// Cyclic complex Jacobi iteration; stops when the off-diagonal Frobenius mass
// drops below `threshold` (scaled by max(1, |A|_F)).
EigenDecomposition hermitian_eigen(const CMatrix& a, double threshold = 1e-13);

// sum of the q smallest eigenvalues
double smallest_eigenvalue_sum(const std::vector<double>& ascending, std::size_t q);

// Inner product <u, v> = v^* H u; identity when H is empty.
cplx inner(const CVector& u, const CVector& v, const CMatrix& metric = {});
double norm(const CVector& v);

// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
// residual norm falls below tol * max(1, input norm) are dropped.
std::vector<CVector> orthonormalize(const std::vector<CVector>& vectors, double tol, const CMatrix& metric = {});

// Orthonormal basis of {v : row_k . v = 0 for all k} (bilinear, no conjugation).
std::vector<CVector> null_space(const std::vector<CVector>& rows, std::size_t dim, double tol);

// Orthonormal basis of span(a) ∩ span(b) from principal angles: directions whose
// cosine exceeds 1 - cos_tol. Inputs must be orthonormal bases.
std::vector<CVector> intersect_subspaces(const std::vector<CVector>& a, const std::vector<CVector>& b,
                                         double cos_tol);

// Residual |v - P v| of v against the span of an orthonormal basis.
double projection_residual(const CVector& v, const std::vector<CVector>& orthonormal_basis);

// Minimal-norm solution of the underdetermined least squares problem A x = b
// for a real matrix, through the eigendecomposition of A A^T.
std::vector<double> least_squares_min_norm(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                           double rel_cutoff = 1e-12);

// Numerical rank with a gap report: returns rank by threshold and the smallest
// retained / largest dropped singular values.
struct RankInfo {
  std::size_t rank = 0;
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;
};
RankInfo numerical_rank(const std::vector<CVector>& vectors, std::size_t dim, double tol);

}  // namespace levikohn::linalg
