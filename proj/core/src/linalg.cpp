#include "levikohn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace levikohn::linalg {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_columns(const std::vector<CVector>& cols, std::size_t rows) {
  CMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

CVector CMatrix::column(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  CMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

namespace {

double off_diagonal_mass(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const CMatrix& input, double threshold) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("hermitian_eigen: matrix not square");
  CMatrix a = input;
  // Symmetrize against round-off in the input.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < 100 && off_diagonal_mass(a) > threshold * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const cplx phase = std::conj(b) / mag;  // e^{-i arg b}
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx upp = c;
        const cplx upq = s;
        const cplx uqp = -s * phase;
        const cplx uqq = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out;
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double smallest_eigenvalue_sum(const std::vector<double>& ascending, std::size_t q) {
  if (q > ascending.size()) throw std::invalid_argument("q exceeds number of eigenvalues");
  return std::accumulate(ascending.begin(), ascending.begin() + static_cast<std::ptrdiff_t>(q), 0.0);
}

cplx inner(const CVector& u, const CVector& v, const CMatrix& metric) {
  cplx s{};
  if (metric.rows() == 0) {
    for (std::size_t a = 0; a < u.size(); ++a) s += std::conj(v[a]) * u[a];
    return s;
  }
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b) s += std::conj(v[a]) * metric(a, b) * u[b];
  return s;
}

double norm(const CVector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<CVector> orthonormalize(const std::vector<CVector>& vectors, double tol, const CMatrix& metric) {
  std::vector<CVector> basis;
  for (const auto& input : vectors) {
    CVector w = input;
    const double input_norm = std::sqrt(std::max(0.0, inner(w, w, metric).real()));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) {
        const cplx c = inner(w, e, metric);
        for (std::size_t a = 0; a < w.size(); ++a) w[a] -= c * e[a];
      }
    }
    const double nw = std::sqrt(std::max(0.0, inner(w, w, metric).real()));
    if (nw <= tol * std::max(1.0, input_norm)) continue;
    for (auto& x : w) x /= nw;
    basis.push_back(std::move(w));
  }
  return basis;
}

double projection_residual(const CVector& v, const std::vector<CVector>& basis) {
  CVector w = v;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : basis) {
      const cplx c = inner(w, e);
      for (std::size_t a = 0; a < w.size(); ++a) w[a] -= c * e[a];
    }
  }
  return norm(w);
}

namespace {

// Extends an orthonormal set to a basis of C^dim by greedily adding the
// standard vector with the largest residual.
std::vector<CVector> complete_basis(std::vector<CVector> basis, std::size_t dim) {
  std::vector<CVector> added;
  while (basis.size() < dim) {
    double best = -1.0;
    CVector best_w;
    for (std::size_t k = 0; k < dim; ++k) {
      CVector e(dim);
      e[k] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
          const cplx c = inner(e, b);
          for (std::size_t a = 0; a < dim; ++a) e[a] -= c * b[a];
        }
      const double r = norm(e);
      if (r > best + 1e-12) {
        best = r;
        best_w = std::move(e);
      }
    }
    for (auto& x : best_w) x /= best;
    basis.push_back(best_w);
    added.push_back(std::move(best_w));
  }
  return added;
}

}  // namespace

std::vector<CVector> null_space(const std::vector<CVector>& rows, std::size_t dim, double tol) {
  std::vector<CVector> conj_rows;
  conj_rows.reserve(rows.size());
  for (const auto& r : rows) {
    CVector c(dim);
    for (std::size_t a = 0; a < dim; ++a) c[a] = std::conj(r[a]);
    conj_rows.push_back(std::move(c));
  }
  // Pivoted order: strongest rows first makes the rank decision stable.
  std::stable_sort(conj_rows.begin(), conj_rows.end(),
                   [](const CVector& a, const CVector& b) { return norm(a) > norm(b); });
  auto row_space = orthonormalize(conj_rows, tol);
  return complete_basis(std::move(row_space), dim);
}

std::vector<CVector> intersect_subspaces(const std::vector<CVector>& a, const std::vector<CVector>& b,
                                         double cos_tol) {
  if (a.empty() || b.empty()) return {};
  const std::size_t dim = a.front().size();
  CMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = inner(b[j], a[i]);
  const CMatrix gram = m * m.adjoint();
  const auto eig = hermitian_eigen(gram);
  const double cutoff = (1.0 - cos_tol) * (1.0 - cos_tol);
  std::vector<CVector> out;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (eig.values[k] < cutoff) break;
    CVector w(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t c = 0; c < dim; ++c) w[c] += eig.vectors(i, k) * a[i][c];
    out.push_back(std::move(w));
  }
  return orthonormalize(out, 1e-8);
}

std::vector<double> least_squares_min_norm(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                           double rel_cutoff) {
  const std::size_t m = a.size();
  if (m == 0) return {};
  const std::size_t n = a.front().size();
  CMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a[i][k] * a[j][k];
      g(i, j) = s;
    }
  const auto eig = hermitian_eigen(g);
  const double top = std::max(eig.values.empty() ? 0.0 : eig.values.back(), 0.0);
  // y = G^+ b
  std::vector<double> y(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double lam = eig.values[k];
    if (lam <= rel_cutoff * top || lam <= 0.0) continue;
    double proj = 0.0;
    for (std::size_t i = 0; i < m; ++i) proj += eig.vectors(i, k).real() * b[i];
    for (std::size_t i = 0; i < m; ++i) y[i] += eig.vectors(i, k).real() * proj / lam;
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) x[k] += a[i][k] * y[i];
  return x;
}

RankInfo numerical_rank(const std::vector<CVector>& vectors, std::size_t dim, double tol) {
  RankInfo info;
  std::vector<CVector> rest = vectors;
  std::vector<CVector> basis;
  double scale = 1.0;
  for (const auto& v : vectors) scale = std::max(scale, norm(v));
  info.smallest_kept = 0.0;
  while (!rest.empty()) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      CVector w = rest[k];
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& e : basis) {
          const cplx c = inner(w, e);
          for (std::size_t a = 0; a < dim; ++a) w[a] -= c * e[a];
        }
      rest[k] = w;
      const double r = norm(w);
      if (r > best_norm) {
        best_norm = r;
        best = k;
      }
    }
    if (best_norm <= tol * scale) {
      info.largest_dropped = best_norm;
      break;
    }
    CVector e = rest[best];
    for (auto& x : e) x /= best_norm;
    basis.push_back(std::move(e));
    info.smallest_kept = best_norm;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    if (basis.size() == dim) break;
  }
  info.rank = basis.size();
  return info;
}

}  // namespace levikohn::linalg
