#include "levikohn/variety.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "levikohn/error.hpp"
#include "levikohn/random.hpp"

namespace levikohn {

namespace {

using linalg::cplx;
using linalg::CVector;

double max_abs_value(const std::vector<Polynomial>& gens, const Point& p) {
  double m = 0.0;
  for (const auto& g : gens) m = std::max(m, std::abs(evaluate(g, p)));
  return m;
}

std::vector<CVector> holomorphic_rows(const std::vector<Polynomial>& gens, const Point& p) {
  std::vector<CVector> rows;
  for (const auto& g : gens) {
    CVector row(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) row[j] = evaluate(wirtinger_d(g, j, DerivativeKind::Holomorphic), p);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RealVector> real_null_space(const std::vector<RealVector>& rows, std::size_t dim, double tol) {
  std::vector<CVector> crow;
  for (const auto& r : rows) crow.emplace_back(r.begin(), r.end());
  const auto ns = linalg::null_space(crow, dim, tol);
  // real and imaginary parts of a null vector of real rows are null vectors themselves
  std::vector<CVector> parts;
  for (const auto& v : ns) {
    CVector re(dim), im(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      re[k] = v[k].real();
      im[k] = v[k].imag();
    }
    parts.push_back(std::move(re));
    parts.push_back(std::move(im));
  }
  std::vector<RealVector> out;
  for (const auto& v : linalg::orthonormalize(parts, 1e-8)) {
    RealVector r(dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = v[k].real();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CVector> complex_tangent(const std::vector<Polynomial>& gens, const Point& p, double tol) {
  return linalg::null_space(holomorphic_rows(gens, p), p.size(), tol);
}

std::size_t real_rank(const std::vector<RealVector>& rows, std::size_t dim, double tol) {
  std::vector<CVector> crow;
  for (const auto& r : rows) crow.emplace_back(r.begin(), r.end());
  return linalg::numerical_rank(crow, dim, tol).rank;
}

Point random_point_in_ball(Rng& rng, const Point& center, double radius) {
  const std::size_t m = 2 * center.size();
  std::vector<double> dir(m);
  double len = 0.0;
  for (auto& x : dir) {
    x = rng.normal();
    len += x * x;
  }
  len = std::sqrt(len);
  const double scale = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(m)) / (len > 0 ? len : 1.0);
  auto x = to_real(center);
  for (std::size_t k = 0; k < m; ++k) x[k] += scale * dir[k];
  return from_real(x);
}

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[j] - b[j]);
  return std::sqrt(s);
}

std::vector<Point> sample_variety(const std::vector<Polynomial>& gens, const Point& center, double radius,
                                  std::size_t count, Rng& rng) {
  std::vector<Point> out;
  const std::size_t attempts = 20 * count + 20;
  for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
    const Point start = random_point_in_ball(rng, center, radius);
    auto p = project_to_variety(gens, start);
    if (p && distance(*p, center) <= radius) out.push_back(std::move(*p));
  }
  return out;
}

Point center_or_origin(const SampleOptions& opts, std::size_t n) {
  if (opts.center.empty()) return Point(n);
  if (opts.center.size() != n) throw InputError("sampling center has the wrong dimension");
  return opts.center;
}

std::string point_string(const Point& p) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t j = 0; j < p.size(); ++j) os << (j ? ", " : "") << p[j].real() << (p[j].imag() < 0 ? "-" : "+") << std::abs(p[j].imag()) << "i";
  os << ")";
  return os.str();
}

}  // namespace

VarietyIdeal VarietyIdeal::from(std::size_t n, std::vector<Polynomial> generators) {
  for (const auto& g : generators) {
    if (g.dim() != n) throw InputError("variety generator has the wrong dimension");
    if (!is_real(g)) throw InputError("variety generator not real: " + to_string(g));
  }
  return VarietyIdeal{std::move(generators)};
}

VarietyIdeal with_boundary(const VarietyIdeal& v, const DefiningFunction& d) {
  VarietyIdeal w = v;
  w.generators.push_back(d.r());
  return w;
}

std::vector<RealVector> real_jacobian_at(const std::vector<Polynomial>& gens, const Point& p) {
  const std::size_t n = p.size();
  std::vector<RealVector> rows;
  for (const auto& row : holomorphic_rows(gens, p)) {
    RealVector r(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = 2.0 * row[j].real();
      r[n + j] = -2.0 * row[j].imag();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::optional<Point> project_to_variety(const std::vector<Polynomial>& gens, const Point& start, double tol,
                                        int max_iter) {
  if (gens.empty()) return start;
  auto x = to_real(start);
  for (int it = 0; it <= max_iter; ++it) {
    const Point p = from_real(x);
    std::vector<double> f;
    double worst = 0.0;
    for (const auto& g : gens) {
      f.push_back(evaluate(g, p).real());
      worst = std::max(worst, std::abs(f.back()));
    }
    if (!std::isfinite(worst)) return std::nullopt;
    if (worst <= tol) return p;
    if (it == max_iter) break;
    const auto step = linalg::least_squares_min_norm(real_jacobian_at(gens, p), f);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= step[k];
  }
  return std::nullopt;
}

std::vector<CVector> levi_kernel_at(const DefiningFunction& d, const Point& p, double tol) {
  require_on_boundary(d, p);
  const auto frame = orthonormal_tangent_frame(d, p, HermitianMetric::euclidean(d.dim()));
  if (frame.empty()) return {};
  const auto eig = linalg::hermitian_eigen(levi_matrix_at(d, p, frame));
  std::vector<CVector> out;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (std::abs(eig.values[k]) >= tol) continue;
    // L(Σ c_i v_i, ·) = 0 iff M conj(c) = 0 for the frame matrix M
    CVector u(d.dim());
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (std::size_t a = 0; a < d.dim(); ++a) u[a] += std::conj(eig.vectors(i, k)) * frame[i][a];
    out.push_back(std::move(u));
  }
  return linalg::orthonormalize(out, 1e-8);
}

TangentSpaces tangent_spaces_at(const VarietyIdeal& v, const Point& p, double tol) {
  const std::size_t n = p.size();
  for (const auto& g : v.generators)
    if (g.dim() != n) throw InputError("point and variety dimensions differ");
  if (max_abs_value(v.generators, p) > tol) throw InputError("point is off the variety");
  TangentSpaces t;
  t.real_basis = real_null_space(real_jacobian_at(v.generators, p), 2 * n, tol);
  t.complex_basis = complex_tangent(v.generators, p, tol);
  return t;
}

std::size_t holomorphic_dimension_at(const DefiningFunction& d, const VarietyIdeal& v, const Point& z, double tol) {
  const auto w = with_boundary(v, d);
  const auto tc = complex_tangent(w.generators, z, tol);
  const auto ker = levi_kernel_at(d, z, tol);
  return linalg::intersect_subspaces(tc, ker, tol).size();
}

HolDimReport holomorphic_dimension(const DefiningFunction& d, const VarietyIdeal& v, const Point& z0,
                                   const HolDimOptions& opts) {
  const std::size_t n = d.dim();
  if (z0.size() != n) throw InputError("base point has the wrong dimension");
  if (opts.samples < 1) throw InputError("sample count must be >= 1");
  const auto w = with_boundary(v, d);
  for (const auto& g : w.generators)
    if (g.dim() != n) throw InputError("variety and defining function dimensions differ");
  if (max_abs_value(w.generators, z0) > kBoundaryTolerance) throw InputError("base point is not on V ∩ bΩ");

  HolDimReport rep;
  rep.base = z0;
  Rng rng(opts.seed);
  bool any = false;
  std::optional<std::size_t> reference_rank;
  for (std::size_t k = 0; k <= opts.levels; ++k) {
    HolDimLevel level;
    level.radius = opts.radius * std::ldexp(1.0, -static_cast<int>(k));
    const auto pts = sample_variety(w.generators, z0, level.radius, opts.samples, rng);
    // Smooth points only: keep the generic (largest) Jacobian rank.
    std::vector<std::size_t> ranks;
    std::size_t top = 0;
    for (const auto& p : pts) {
      ranks.push_back(real_rank(real_jacobian_at(w.generators, p), 2 * n, opts.tol));
      top = std::max(top, ranks.back());
    }
    bool first = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (ranks[i] != top) {
        ++level.excluded_singular;
        continue;
      }
      const std::size_t dim = holomorphic_dimension_at(d, v, pts[i], opts.tol);
      level.min_dim = first ? dim : std::min(level.min_dim, dim);
      level.max_dim = first ? dim : std::max(level.max_dim, dim);
      first = false;
      ++level.points;
    }
    if (level.excluded_singular > 0)
      rep.warnings.push_back("radius " + std::to_string(level.radius) + ": " + std::to_string(level.excluded_singular) +
                             " sample(s) with a Jacobian rank jump excluded");
    if (level.points == 0) {
      rep.warnings.push_back("radius " + std::to_string(level.radius) + ": no sample points on V ∩ bΩ");
    } else {
      if (reference_rank && *reference_rank != top)
        rep.warnings.push_back("generic Jacobian rank changes between radii");
      reference_rank = top;
      rep.value = any ? std::max(rep.value, level.min_dim) : level.min_dim;
      any = true;
    }
    rep.levels.push_back(level);
  }
  if (!any) throw InputError("no sample points found on V ∩ bΩ");
  return rep;
}

TangentialCheck complex_tangential_check(const DefiningFunction& d, const VarietyIdeal& m, const SampleOptions& opts) {
  const std::size_t n = d.dim();
  Rng rng(opts.seed);
  const Point center = center_or_origin(opts, n);
  const auto pts = sample_variety(m.generators, center, opts.radius, opts.samples, rng);
  if (pts.empty()) throw InputError("no sample points found on M");
  TangentialCheck out;
  for (const auto& p : pts) {
    const double rv = std::abs(d.value_at(p));
    if (rv > kBoundaryTolerance)
      throw InputError("M is not contained in the boundary: |r| = " + std::to_string(rv) + " at " + point_string(p));
    const auto g = d.real_gradient_at(p);
    double gn = 0.0;
    for (double x : g) gn += x * x;
    gn = std::sqrt(gn);
    if (gn == 0.0) throw InputError("dr vanishes at a sample point of M");
    for (const auto& x : real_null_space(real_jacobian_at(m.generators, p), 2 * n, opts.tol)) {
      // J(a, b) = (-b, a)
      double djx = 0.0;
      for (std::size_t j = 0; j < n; ++j) djx += g[j] * -x[n + j] + g[n + j] * x[j];
      out.max_violation = std::max(out.max_violation, std::abs(djx) / gn);
    }
    ++out.points;
  }
  out.complex_tangential = out.max_violation < opts.tol;
  return out;
}

PolyVectorField PolyVectorField::real(std::vector<Polynomial> coeffs) {
  if (coeffs.empty() || coeffs.size() % 2 != 0) throw InputError("real vector field needs 2n coefficients");
  for (const auto& c : coeffs) {
    if (c.dim() != coeffs.size() / 2) throw InputError("vector field coefficient has the wrong dimension");
    if (!is_real(c)) throw InputError("real vector field has a non-real coefficient: " + to_string(c));
  }
  return PolyVectorField{FieldKind::Real, std::move(coeffs)};
}

PolyVectorField PolyVectorField::holomorphic(std::vector<Polynomial> coeffs) {
  if (coeffs.empty()) throw InputError("vector field needs coefficients");
  for (const auto& c : coeffs)
    if (c.dim() != coeffs.size()) throw InputError("vector field coefficient has the wrong dimension");
  return PolyVectorField{FieldKind::Holomorphic, std::move(coeffs)};
}

std::size_t PolyVectorField::dim() const { return kind == FieldKind::Real ? coeffs.size() / 2 : coeffs.size(); }

bool PolyVectorField::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial apply(const PolyVectorField& x, const Polynomial& f) {
  const std::size_t n = x.dim();
  if (f.dim() != n) throw InputError("field and function dimensions differ");
  Polynomial out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial dz = wirtinger_d(f, j, DerivativeKind::Holomorphic);
    if (x.kind == FieldKind::Holomorphic) {
      if (!x.coeffs[j].is_zero()) out += x.coeffs[j] * dz;
      continue;
    }
    const Polynomial dzb = wirtinger_d(f, j, DerivativeKind::Antiholomorphic);
    // ∂/∂x = ∂ + ∂̄, ∂/∂y = i(∂ - ∂̄)
    if (!x.coeffs[j].is_zero()) out += x.coeffs[j] * (dz + dzb);
    if (!x.coeffs[n + j].is_zero()) out += x.coeffs[n + j] * (GaussianRational::i() * (dz - dzb));
  }
  return out;
}

PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.kind != y.kind) throw InputError("lie_bracket: vector field kinds differ");
  if (x.coeffs.size() != y.coeffs.size()) throw InputError("lie_bracket: dimensions differ");
  PolyVectorField out{x.kind, {}};
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) out.coeffs.push_back(apply(x, y.coeffs[k]) - apply(y, x.coeffs[k]));
  return out;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.kind != b.kind || a.coeffs.size() != b.coeffs.size()) throw InputError("vector field sum: shapes differ");
  PolyVectorField out = a;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  return out;
}

PolyVectorField real_part(const PolyVectorField& z) {
  if (z.kind == FieldKind::Real) return z;
  PolyVectorField out{FieldKind::Real, {}};
  for (const auto& a : z.coeffs) out.coeffs.push_back(real_part(a));
  for (const auto& a : z.coeffs) out.coeffs.push_back(imag_part(a));
  return out;
}

PolyVectorField imag_part(const PolyVectorField& z) {
  if (z.kind == FieldKind::Real) throw InputError("imag_part: field is already real");
  PolyVectorField out{FieldKind::Real, {}};
  for (const auto& a : z.coeffs) out.coeffs.push_back(imag_part(a));
  for (const auto& a : z.coeffs) out.coeffs.push_back(-real_part(a));
  return out;
}

std::vector<PolyVectorField> to_real_fields(const std::vector<PolyVectorField>& fields) {
  std::vector<PolyVectorField> out;
  for (const auto& f : fields) {
    if (f.kind == FieldKind::Real) {
      out.push_back(f);
    } else {
      out.push_back(real_part(f));
      out.push_back(imag_part(f));
    }
  }
  return out;
}

RealVector evaluate(const PolyVectorField& x, const Point& p) {
  const PolyVectorField r = real_part(x);
  RealVector out;
  for (const auto& c : r.coeffs) out.push_back(evaluate(c, p).real());
  return out;
}

namespace {

struct SpanRank {
  std::size_t rank = 0;
  bool degenerate = false;
};

SpanRank span_rank(const std::vector<RealVector>& vecs, std::size_t dim, double tol) {
  std::vector<CVector> c;
  for (const auto& v : vecs) c.emplace_back(v.begin(), v.end());
  const auto info = linalg::numerical_rank(c, dim, tol);
  double scale = 1.0;
  for (const auto& v : c) scale = std::max(scale, linalg::norm(v));
  SpanRank s;
  s.rank = info.rank;
  // values within two decades of the threshold make the rank decision unreliable
  s.degenerate = (info.rank > 0 && info.smallest_kept < 100.0 * tol * scale) ||
                 info.largest_dropped > 0.01 * tol * scale;
  return s;
}

constexpr std::size_t kMaxLayer = 256;

BracketFlag flag_at(const std::vector<PolyVectorField>& real, const VarietyIdeal& m, const Point& p,
                    const FlagOptions& opts) {
  const std::size_t n = p.size();
  BracketFlag flag;
  flag.base = p;
  flag.manifold_dim = real_null_space(real_jacobian_at(m.generators, p), 2 * n, opts.tol).size();

  std::vector<RealVector> values;
  for (const auto& f : real) values.push_back(evaluate(f, p));
  auto rk = span_rank(values, 2 * n, opts.tol);
  if (rk.degenerate) throw InputError("rank computation degenerate at " + point_string(p) + "; move to a nearby point");
  flag.dims.push_back(rk.rank);
  std::size_t total = rk.rank;

  std::vector<PolyVectorField> layer = real;
  for (std::size_t depth = 1; depth <= opts.max_depth && total < flag.manifold_dim; ++depth) {
    std::vector<PolyVectorField> next;
    for (const auto& x0 : real) {
      for (const auto& w : layer) {
        auto b = lie_bracket(x0, w);
        if (b.is_zero()) continue;
        if (next.size() >= kMaxLayer) {
          flag.warnings.push_back("bracket layer " + std::to_string(depth) + " truncated at " + std::to_string(kMaxLayer) + " fields");
          break;
        }
        next.push_back(std::move(b));
      }
      if (next.size() >= kMaxLayer) break;
    }
    if (next.empty()) break;
    for (const auto& f : next) values.push_back(evaluate(f, p));
    rk = span_rank(values, 2 * n, opts.tol);
    if (rk.degenerate) throw InputError("rank computation degenerate at " + point_string(p) + "; move to a nearby point");
    if (rk.rank > total) {
      // keep dims aligned with depth even when an intermediate layer adds nothing at p
      while (flag.dims.size() < depth) flag.dims.push_back(0);
      flag.dims.push_back(rk.rank - total);
      total = rk.rank;
    }
    layer = std::move(next);
  }
  flag.depth = flag.dims.size() - 1;
  flag.finite_type = total == flag.manifold_dim;
  return flag;
}

}  // namespace

BracketFlag bracket_flag(const std::vector<PolyVectorField>& fields, const VarietyIdeal& m, const Point& p,
                         const FlagOptions& opts) {
  const std::size_t n = p.size();
  if (max_abs_value(m.generators, p) > kBoundaryTolerance) throw InputError("base point is not on M");
  const auto real = to_real_fields(fields);
  for (std::size_t i = 0; i < real.size(); ++i) {
    if (real[i].dim() != n) throw InputError("vector field and point dimensions differ");
    for (const auto& g : m.generators) {
      const Polynomial xg = apply(real[i], g);
      if (xg.is_zero()) continue;
      if (!radical_membership(xg, m.generators, n, opts.groebner))
        throw InputError("vector field " + std::to_string(i + 1) + " is not tangent to M");
    }
  }
  BracketFlag flag = flag_at(real, m, p, opts);

  if (opts.nearby_samples > 0) {
    Rng rng(opts.seed);
    const auto pts = sample_variety(m.generators, p, opts.nearby_radius, opts.nearby_samples, rng);
    for (const auto& q : pts) {
      try {
        const BracketFlag other = flag_at(real, m, q, opts);
        if (std::lexicographical_compare(other.dims.begin(), other.dims.end(), flag.dims.begin(), flag.dims.end()))
          flag.warnings.push_back("smaller flag at nearby point " + point_string(q));
      } catch (const InputError&) {
        flag.warnings.push_back("rank degenerate at nearby point " + point_string(q));
      }
    }
  }
  return flag;
}

InvolutivityCheck involutivity_check(const std::vector<PolyVectorField>& fields, const VarietyIdeal& m,
                                     const SampleOptions& opts) {
  const auto real = to_real_fields(fields);
  if (real.empty()) throw InputError("involutivity_check needs at least one field");
  const std::size_t n = real.front().dim();
  Rng rng(opts.seed);
  const Point center = center_or_origin(opts, n);
  const auto pts = sample_variety(m.generators, center, opts.radius, opts.samples, rng);
  if (pts.empty()) throw InputError("no sample points found on M");

  std::vector<PolyVectorField> brackets;
  for (std::size_t i = 0; i < real.size(); ++i)
    for (std::size_t j = i + 1; j < real.size(); ++j) brackets.push_back(lie_bracket(real[i], real[j]));

  InvolutivityCheck out;
  std::optional<std::size_t> rank0;
  for (const auto& p : pts) {
    std::vector<CVector> vals;
    for (const auto& f : real) {
      const auto v = evaluate(f, p);
      vals.emplace_back(v.begin(), v.end());
    }
    const auto basis = linalg::orthonormalize(vals, opts.tol);
    if (rank0 && *rank0 != basis.size())
      out.warnings.push_back("distribution rank jumps from " + std::to_string(*rank0) + " to " +
                             std::to_string(basis.size()) + " at " + point_string(p));
    if (!rank0) rank0 = basis.size();
    for (const auto& b : brackets) {
      const auto v = evaluate(b, p);
      const CVector cv(v.begin(), v.end());
      const double res = linalg::projection_residual(cv, basis) / std::max(1.0, linalg::norm(cv));
      out.max_residual = std::max(out.max_residual, res);
    }
    ++out.points;
  }
  out.involutive = out.max_residual < opts.tol;
  return out;
}

HoloMap HoloMap::from(std::size_t params, std::vector<Polynomial> components) {
  if (params < 1) throw InputError("a map needs at least one parameter");
  for (const auto& c : components) {
    if (c.dim() != params) throw InputError("map component has the wrong number of parameters");
    if (!c.is_holomorphic()) throw InputError("map component depends on conj(w): " + to_string(c, "w"));
  }
  return HoloMap{params, std::move(components)};
}

Polynomial compose(const Polynomial& r, const HoloMap& phi) {
  const std::size_t n = r.dim();
  if (phi.components.size() != n) throw InputError("map has " + std::to_string(phi.components.size()) +
                                                   " components, expected " + std::to_string(n));
  std::vector<Polynomial> conj_phi;
  for (const auto& c : phi.components) conj_phi.push_back(conjugate(c));
  // powers[j][e] = φ_j^e, built on demand
  std::vector<std::vector<Polynomial>> pw(n), cpw(n);
  auto power = [&](std::vector<Polynomial>& cache, const Polynomial& base, std::size_t e) -> const Polynomial& {
    if (cache.empty()) cache.push_back(Polynomial::constant(phi.params, GaussianRational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  Polynomial out(phi.params);
  for (const auto& t : r.terms()) {
    Polynomial prod = Polynomial::constant(phi.params, t.coeff);
    for (std::size_t j = 0; j < n; ++j) {
      if (t.monomial[j] > 0) prod = prod * power(pw[j], phi.components[j], t.monomial[j]);
      if (t.monomial[n + j] > 0) prod = prod * power(cpw[j], conj_phi[j], t.monomial[n + j]);
    }
    out += prod;
  }
  return out;
}

TangencyOrder tangency_order(const DefiningFunction& d, const HoloMap& phi, std::size_t max_order) {
  TangencyOrder out;
  out.composition = compose(d.r(), phi);
  if (out.composition.is_zero()) {
    out.kind = TangencyKind::IdenticallyZero;
    return out;
  }
  if (!out.composition.constant_term().is_zero()) throw InputError("φ(0) is not on the boundary");
  out.order = static_cast<std::size_t>(out.composition.lowest_degree());
  out.kind = out.order > max_order ? TangencyKind::ExceedsMaxOrder : TangencyKind::Order;
  return out;
}

std::string to_string(TangencyKind k) {
  switch (k) {
    case TangencyKind::Order: return "order";
    case TangencyKind::IdenticallyZero: return "identically-zero";
    case TangencyKind::ExceedsMaxOrder: return "exceeds-max-order";
  }
  return "unknown";
}

std::string to_string(FieldKind k) { return k == FieldKind::Real ? "real" : "holomorphic"; }

}  // namespace levikohn
