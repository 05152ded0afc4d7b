#include "levikohn/levi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "levikohn/error.hpp"
#include "levikohn/poly_matrix.hpp"
#include "levikohn/random.hpp"

namespace levikohn {

std::vector<double> to_real(const Point& p) {
  const std::size_t n = p.size();
  std::vector<double> x(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = p[j].real();
    x[n + j] = p[j].imag();
  }
  return x;
}

Point from_real(const std::vector<double>& x) {
  const std::size_t n = x.size() / 2;
  Point p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = {x[j], x[n + j]};
  return p;
}

DefiningFunction::DefiningFunction(Polynomial r) : r_(std::move(r)) {
  if (r_.dim() == 0) throw InputError("defining function needs dimension >= 1");
  if (!is_real(r_)) throw InputError("defining function not real");
  gradient_ = holomorphic_gradient(r_);
  hessian_.resize(r_.dim());
  for (std::size_t i = 0; i < r_.dim(); ++i)
    for (std::size_t j = 0; j < r_.dim(); ++j)
      hessian_[i].push_back(wirtinger_d(gradient_[i], j, DerivativeKind::Antiholomorphic));
}

linalg::CVector DefiningFunction::gradient_at(const Point& p) const {
  linalg::CVector g;
  g.reserve(gradient_.size());
  for (const auto& gj : gradient_) g.push_back(evaluate(gj, p));
  return g;
}

std::vector<double> DefiningFunction::real_gradient_at(const Point& p) const {
  const std::size_t n = dim();
  const auto g = gradient_at(p);
  std::vector<double> out(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = 2.0 * g[j].real();
    out[n + j] = -2.0 * g[j].imag();
  }
  return out;
}

linalg::CMatrix DefiningFunction::hessian_at(const Point& p) const {
  const std::size_t n = dim();
  linalg::CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = evaluate(hessian_[i][j], p);
  return h;
}

namespace {

// Exact determinant over Q(i) by Gaussian elimination.
GaussianRational exact_det(std::vector<std::vector<GaussianRational>> a) {
  const std::size_t n = a.size();
  GaussianRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return {};
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const GaussianRational inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const GaussianRational f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace

HermitianMetric HermitianMetric::euclidean(std::size_t n) {
  HermitianMetric m;
  m.matrix_ = linalg::CMatrix::identity(n);
  m.name_ = "euclidean";
  return m;
}

HermitianMetric HermitianMetric::constant(const std::vector<std::vector<GaussianRational>>& h) {
  const std::size_t n = h.size();
  for (const auto& row : h)
    if (row.size() != n) throw InputError("metric matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h[i][j] != h[j][i].conj()) throw InputError("metric matrix is not Hermitian");
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<GaussianRational>> lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i].assign(h[i].begin(), h[i].begin() + static_cast<std::ptrdiff_t>(k));
    const GaussianRational m = exact_det(lead);
    if (!m.is_real() || sgn(m.re()) <= 0) throw InputError("metric matrix is not positive definite");
  }
  HermitianMetric m;
  m.matrix_ = linalg::CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.matrix_(i, j) = h[i][j].to_complex();
  m.name_ = "constant";
  return m;
}

HermitianMetric HermitianMetric::graph(std::size_t n, std::size_t graph_var) {
  if (graph_var >= n) throw InputError("graph variable out of range");
  HermitianMetric m;
  m.matrix_ = linalg::CMatrix::identity(n);
  m.matrix_(graph_var, graph_var) = 0.0;
  m.name_ = "graph";
  return m;
}

PolyMatrix complex_hessian(const DefiningFunction& d) { return d.hessian(); }

std::vector<Polynomial> gradient_form(const DefiningFunction& d) { return d.gradient(); }

TangentFrame graph_frame(const DefiningFunction& d, std::size_t graph_var) {
  const std::size_t n = d.dim();
  if (graph_var >= n) throw InputError("graph variable out of range");
  const auto& grad = d.gradient();
  TangentFrame f;
  f.graph_var = graph_var;
  f.denominator = grad[graph_var];
  if (f.denominator.is_zero()) throw InputError("frame direction degenerate: r_z" + std::to_string(graph_var + 1) + " vanishes identically");
  for (std::size_t j = 0; j < n; ++j) {
    if (j == graph_var) continue;
    std::vector<Polynomial> v(n, Polynomial(n));
    v[j] = f.denominator;
    v[graph_var] = -grad[j];
    f.numerators.push_back(std::move(v));
  }
  if (f.denominator.is_constant()) {
    const GaussianRational inv = f.denominator.constant_term().inverse();
    for (auto& v : f.numerators)
      for (auto& e : v) e *= inv;
    f.denominator = Polynomial::constant(n, 1);
  }
  return f;
}

void require_on_boundary(const DefiningFunction& d, const Point& p, double tol) {
  if (p.size() != d.dim()) throw InputError("point has wrong number of coordinates");
  const double v = d.value_at(p);
  if (!(std::abs(v) <= tol)) {
    std::ostringstream os;
    os << "point is off the boundary: |r(p)| = " << std::abs(v) << " > " << tol;
    throw InputError(os.str());
  }
}

TangentFrame graph_frame(const DefiningFunction& d, const Point& p, std::size_t graph_var) {
  require_on_boundary(d, p);
  TangentFrame f = graph_frame(d, graph_var);
  const auto grad = d.gradient_at(p);
  const std::complex<double> den = evaluate(f.denominator, p);
  if (std::abs(grad[graph_var]) <= 1e-12 * std::max(1.0, linalg::norm(grad)))
    throw InputError("frame direction degenerate: r_z" + std::to_string(graph_var + 1) + " vanishes at the point");
  for (const auto& num : f.numerators) {
    linalg::CVector v;
    for (const auto& e : num) v.push_back(evaluate(e, p) / den);
    f.vectors.push_back(std::move(v));
  }
  f.base = p;
  return f;
}

LeviFrameMatrix levi_matrix_on_frame(const DefiningFunction& d, const TangentFrame& f) {
  const std::size_t n = d.dim();
  const auto& h = d.hessian();
  const std::size_t k = f.numerators.size();
  // Conjugated frame vectors, computed once.
  PolyMatrix conj_num(k);
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& e : f.numerators[j]) conj_num[j].push_back(conjugate(e));
  // w_i[b] = Σ_a v_i[a] r_{a b̄}
  PolyMatrix w(k, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a)
        if (!f.numerators[i][a].is_zero() && !h[a][b].is_zero()) w[i][b] += f.numerators[i][a] * h[a][b];

  LeviFrameMatrix m;
  m.numerators.assign(k, std::vector<Polynomial>(k, Polynomial(n)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t b = 0; b < n; ++b)
        if (!w[i][b].is_zero() && !conj_num[j][b].is_zero()) m.numerators[i][j] += w[i][b] * conj_num[j][b];
  m.denominator = f.denominator * conjugate(f.denominator);
  if (m.denominator.is_constant() && !m.denominator.constant_term().is_one()) {
    const GaussianRational inv = m.denominator.constant_term().inverse();
    for (auto& row : m.numerators)
      for (auto& e : row) e *= inv;
    m.denominator = Polynomial::constant(n, 1);
  }
  return m;
}

linalg::CMatrix levi_matrix_at(const DefiningFunction& d, const Point& p, const std::vector<linalg::CVector>& frame) {
  const std::size_t n = d.dim();
  const auto h = d.hessian_at(p);
  const std::size_t k = frame.size();
  linalg::CMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::complex<double> s{};
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s += frame[i][a] * h(a, b) * std::conj(frame[j][b]);
      m(i, j) = s;
    }
  return m;
}

TraceDet frame_trace_det(const LeviFrameMatrix& m) {
  const std::size_t n = m.denominator.dim();
  TraceDet out;
  out.trace = Polynomial(n);
  for (std::size_t i = 0; i < m.numerators.size(); ++i) out.trace += m.numerators[i][i];
  out.det = determinant(m.numerators, n);
  out.denominator = m.denominator;
  return out;
}

std::vector<linalg::CVector> orthonormal_tangent_frame(const DefiningFunction& d, const Point& p,
                                                       const HermitianMetric& metric) {
  const std::size_t n = d.dim();
  if (metric.dim() != n) throw InputError("metric dimension does not match the defining function");
  const auto grad = d.gradient_at(p);
  if (linalg::norm(grad) <= 1e-12) throw InputError("degenerate gradient: ∂r(p) = 0");
  const auto tangent = linalg::null_space({grad}, n, 1e-12);
  auto frame = linalg::orthonormalize(tangent, 1e-10, metric.matrix());
  if (frame.size() + 1 != n) throw InputError("metric '" + metric.name() + "' is degenerate on the complex tangent space");
  return frame;
}

double q_convexity_margin(const linalg::CMatrix& levi, std::size_t q) {
  const auto eig = linalg::hermitian_eigen(levi);
  return linalg::smallest_eigenvalue_sum(eig.values, q);
}

ClassificationReport classify_point(const DefiningFunction& d, const Point& p, std::size_t q,
                                    const HermitianMetric& metric, double tol) {
  const std::size_t n = d.dim();
  if (n < 2) throw InputError("classification needs dimension >= 2");
  if (q < 1 || q > n - 1) throw InputError("q must satisfy 1 <= q <= n-1");
  require_on_boundary(d, p);
  const auto frame = orthonormal_tangent_frame(d, p, metric);
  const auto levi = levi_matrix_at(d, p, frame);
  const auto eig = linalg::hermitian_eigen(levi);

  ClassificationReport rep;
  rep.point = p;
  rep.q = q;
  rep.eigenvalues = eig.values;
  for (double lam : eig.values) {
    if (lam >= tol) {
      ++rep.n_pos;
    } else if (lam <= -tol) {
      ++rep.n_neg;
    } else {
      ++rep.n_zero;
    }
  }
  rep.q_margin = linalg::smallest_eigenvalue_sum(eig.values, q);
  rep.q_convex = rep.q_margin > tol;
  rep.pseudoconvex = eig.values.front() >= -tol;
  rep.z_q = rep.n_pos >= n - q || rep.n_neg >= q + 1;
  return rep;
}

BoundarySample sample_boundary(const DefiningFunction& d, const Box& box, std::size_t count, std::uint64_t seed) {
  const std::size_t n = d.dim();
  if (count < 1) throw InputError("sample count must be >= 1");
  if (box.size() != 2 * n) throw InputError("sampling box must have 2n intervals");
  Rng rng(seed);
  BoundarySample out;
  constexpr int kGrid = 32;
  const std::size_t max_attempts = 50 * count + 100;

  for (std::size_t attempt = 0; attempt < max_attempts && out.points.size() < count; ++attempt) {
    std::vector<double> a(2 * n);
    std::vector<double> dir(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
      a[k] = rng.uniform(box[k].first, box[k].second);
      dir[k] = rng.uniform(box[k].first, box[k].second) - a[k];
    }
    auto at = [&](double t) {
      std::vector<double> x(2 * n);
      for (std::size_t k = 0; k < 2 * n; ++k) x[k] = a[k] + t * dir[k];
      return x;
    };
    auto f = [&](double t) { return d.value_at(from_real(at(t))); };

    double lo = 0.0;
    double flo = f(0.0);
    bool bracketed = false;
    double hi = 0.0;
    for (int g = 1; g <= kGrid; ++g) {
      const double t = static_cast<double>(g) / kGrid;
      const double ft = f(t);
      if (flo == 0.0 || (flo < 0.0) != (ft < 0.0)) {
        hi = flo == 0.0 ? lo : t;
        bracketed = true;
        break;
      }
      lo = t;
      flo = ft;
    }
    if (!bracketed) continue;

    double t = lo;
    if (hi != lo) {
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      t = 0.5 * (lo + hi);
      // Newton polish inside the bracket.
      for (int it = 0; it < 3; ++it) {
        const double ft = f(t);
        const auto g = d.real_gradient_at(from_real(at(t)));
        double slope = 0.0;
        for (std::size_t k = 0; k < 2 * n; ++k) slope += g[k] * dir[k];
        if (slope == 0.0) break;
        const double next = t - ft / slope;
        if (next < lo || next > hi || std::abs(f(next)) >= std::abs(ft)) break;
        t = next;
      }
    }
    Point p = from_real(at(t));
    if (std::abs(d.value_at(p)) <= 1e-12) out.points.push_back(std::move(p));
  }
  if (out.points.size() < count) {
    std::ostringstream os;
    os << "boundary sampling found " << out.points.size() << " of " << count << " requested points in the box";
    out.warning = os.str();
  }
  return out;
}

}  // namespace levikohn
