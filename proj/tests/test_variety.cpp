#include <cmath>

#include "doctest.h"
#include "levikohn/error.hpp"
#include "levikohn/kohn.hpp"
#include "levikohn/variety.hpp"
#include "oracles.hpp"

using namespace levikohn;
using oracle::abs2;
using oracle::c;
using oracle::z;
using oracle::zb;

namespace {

Polynomial xr(std::size_t n, std::size_t j) { return Polynomial::x(n, j - 1); }
Polynomial yr(std::size_t n, std::size_t j) { return Polynomial::y(n, j - 1); }

// Real field with a single coefficient 1 on ∂/∂x_j (j in 1..n) or ∂/∂y_j (j in n+1..2n).
PolyVectorField coordinate_field(std::size_t n, std::size_t slot) {
  std::vector<Polynomial> cs(2 * n, Polynomial(n));
  cs[slot - 1] = c(n, 1);
  return PolyVectorField::real(cs);
}

// r = -x3 + |z2|^2: Levi form diag(0, 1) along the z3 = 0 slice.
Polynomial cylinder_r() { return -xr(3, 3) + abs2(3, 2); }

// M = {y2 = |z1|^2} and its CR field ∂z1 + 2i conj(z1) ∂z2.
Polynomial heisenberg_m() { return yr(2, 2) - abs2(2, 1); }
PolyVectorField heisenberg_cr() {
  const std::size_t n = 2;
  return PolyVectorField::holomorphic({c(n, 1), Polynomial::constant(n, GaussianRational(2) * GaussianRational::i()) * zb(n, 1)});
}

PolyVectorField random_real_field(Rng& rng, std::size_t n) {
  std::vector<Polynomial> cs;
  for (std::size_t k = 0; k < 2 * n; ++k) cs.push_back(oracle::random_real_polynomial(rng, n, 3, 2));
  return PolyVectorField::real(cs);
}

PolyVectorField random_holo_field(Rng& rng, std::size_t n) {
  std::vector<Polynomial> cs;
  for (std::size_t k = 0; k < n; ++k) cs.push_back(oracle::random_polynomial(rng, n, 3, 2));
  return PolyVectorField::holomorphic(cs);
}

double dot(const linalg::CVector& a, const linalg::CVector& b) {
  linalg::cplx s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return std::abs(s);
}

}  // namespace

TEST_CASE("levi_kernel_at examples") {
  const Point origin3(3);
  CHECK(levi_kernel_at(DefiningFunction(oracle::half_space_r(3)), origin3).size() == 2);
  CHECK(levi_kernel_at(DefiningFunction(oracle::ball_r(2)), Point{{1, 0}, {0, 0}}).empty());
  const auto k = levi_kernel_at(DefiningFunction(cylinder_r()), origin3);
  REQUIRE(k.size() == 1);
  CHECK(std::abs(k[0][0]) == doctest::Approx(1.0));
  CHECK(std::abs(k[0][1]) < 1e-12);
  CHECK(std::abs(k[0][2]) < 1e-12);
  CHECK_THROWS_AS(levi_kernel_at(DefiningFunction(oracle::ball_r(2)), Point{{0.5, 0}, {0, 0}}), InputError);
}

TEST_CASE("levi kernel dimension plus nonzero eigenvalues is n-1") {
  const DefiningFunction d(oracle::c3_example_r());
  const auto pts = sample_boundary(d, Box(6, {-1.0, 1.0}), 40, 3).points;
  REQUIRE(pts.size() == 40);
  for (const auto& p : pts) {
    const auto frame = orthonormal_tangent_frame(d, p, HermitianMetric::euclidean(3));
    const auto eig = linalg::hermitian_eigen(levi_matrix_at(d, p, frame));
    std::size_t big = 0;
    for (double v : eig.values) big += std::abs(v) >= kSubspaceTolerance;
    CHECK(levi_kernel_at(d, p).size() + big == 2);
  }
}

TEST_CASE("tangent_spaces_at examples") {
  // the curve z1 = z2 inside the C^3 example's boundary
  const std::size_t n = 3;
  const auto v = VarietyIdeal::from(n, {xr(n, 1) - xr(n, 2), yr(n, 1) - yr(n, 2), oracle::c3_example_r()});
  const auto t = tangent_spaces_at(v, Point{{1, 0}, {1, 0}, {0, 0}});
  REQUIRE(t.complex_basis.size() == 1);
  const linalg::CVector dir{{1 / std::sqrt(2.0), 0}, {1 / std::sqrt(2.0), 0}, {0, 0}};
  CHECK(dot(t.complex_basis[0], dir) == doctest::Approx(1.0));
  CHECK(t.real_basis.size() == 3);

  const auto b = VarietyIdeal::from(n, {oracle::c3_example_r()});
  CHECK(tangent_spaces_at(b, Point{{0, 0}, {0, 0}, {0, 0.2}}).complex_basis.size() == 2);
  const auto flat = VarietyIdeal::from(n, {oracle::half_space_r(n)});
  CHECK(tangent_spaces_at(flat, Point(n)).complex_basis.size() == n - 1);

  const auto axis = VarietyIdeal::from(2, {xr(2, 1), yr(2, 1)});
  const auto ta = tangent_spaces_at(axis, Point{{0, 0}, {0.4, -0.2}});
  REQUIRE(ta.complex_basis.size() == 1);
  CHECK(std::abs(ta.complex_basis[0][0]) < 1e-12);
  CHECK(ta.real_basis.size() == 2);

  CHECK_THROWS_AS(tangent_spaces_at(axis, Point{{1, 0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(VarietyIdeal::from(2, {z(2, 1)}), InputError);
}

TEST_CASE("holomorphic_dimension examples") {
  HolDimOptions opts;
  opts.samples = 12;
  const auto flat = holomorphic_dimension(DefiningFunction(oracle::half_space_r(3)), VarietyIdeal{}, Point(3), opts);
  CHECK(flat.value == 2);
  CHECK(flat.levels.size() == opts.levels + 1);

  const auto ball = holomorphic_dimension(DefiningFunction(oracle::ball_r(2)), VarietyIdeal{}, Point{{1, 0}, {0, 0}}, opts);
  CHECK(ball.value == 0);

  const std::size_t n = 3;
  const auto v = VarietyIdeal::from(n, {xr(n, 2), yr(n, 2), xr(n, 3)});
  const auto cyl = holomorphic_dimension(DefiningFunction(cylinder_r()), v, Point(n), opts);
  CHECK(cyl.value == 1);
  for (const auto& level : cyl.levels) CHECK(level.points > 0);

  CHECK_THROWS_AS(holomorphic_dimension(DefiningFunction(oracle::ball_r(2)), VarietyIdeal{}, Point(2), opts), InputError);
}

TEST_CASE("holomorphic dimension of a Levi-flat boundary is n-1") {
  const std::size_t n = 2;
  // 2 Re(z2 + z1^2) is pluriharmonic
  const Polynomial r = z(n, 2) + zb(n, 2) + z(n, 1) * z(n, 1) + zb(n, 1) * zb(n, 1);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    HolDimOptions opts;
    opts.samples = 10;
    opts.seed = seed;
    opts.radius = 0.05 * static_cast<double>(seed);
    CHECK(holomorphic_dimension(DefiningFunction(r), VarietyIdeal{}, Point(n), opts).value == n - 1);
  }
}

TEST_CASE("complex_tangential_check examples") {
  const std::size_t n = 3;
  SampleOptions opts;
  opts.samples = 20;
  const DefiningFunction we(oracle::c3_example_r());
  const auto curve = VarietyIdeal::from(n, {xr(n, 1) - xr(n, 2), yr(n, 1) - yr(n, 2), xr(n, 3), yr(n, 3)});
  const auto a = complex_tangential_check(we, curve, opts);
  CHECK(a.complex_tangential);
  CHECK(a.points == 20);

  const auto whole = complex_tangential_check(we, VarietyIdeal::from(n, {oracle::c3_example_r()}), opts);
  CHECK_FALSE(whole.complex_tangential);
  CHECK(whole.max_violation > 0.5);

  const DefiningFunction flat(oracle::half_space_r(n));
  const auto real_line = VarietyIdeal::from(n, {yr(n, 1), xr(n, 3), yr(n, 3)});
  CHECK(complex_tangential_check(flat, real_line, opts).complex_tangential);

  const auto plane = VarietyIdeal::from(2, {yr(2, 1), yr(2, 2)});
  CHECK_THROWS_AS(complex_tangential_check(DefiningFunction(oracle::ball_r(2)), plane, opts), InputError);
}

TEST_CASE("lie_bracket examples") {
  const std::size_t n = 2;
  CHECK(lie_bracket(coordinate_field(n, 1), coordinate_field(n, 3)).is_zero());

  // X = ∂x1 + 2 y1 ∂y2, Y = ∂y1 - 2 x1 ∂y2
  const PolyVectorField x = PolyVectorField::real({c(n, 1), Polynomial(n), Polynomial(n), c(n, 2) * yr(n, 1)});
  const PolyVectorField y = PolyVectorField::real({Polynomial(n), Polynomial(n), c(n, 1), c(n, -2) * xr(n, 1)});
  const auto b = lie_bracket(x, y);
  CHECK(b == PolyVectorField::real({Polynomial(n), Polynomial(n), Polynomial(n), c(n, -4)}));

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_real_field(rng, n);
    CHECK(lie_bracket(f, f).is_zero());
  }
  CHECK_THROWS_AS(lie_bracket(x, heisenberg_cr()), InputError);
  CHECK_THROWS_AS(PolyVectorField::real({z(n, 1), c(n, 1), c(n, 1), c(n, 1)}), InputError);
}

TEST_CASE("bracket antisymmetry and the Jacobi identity on random triples") {
  Rng rng(2718);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2;
    const bool holo = t % 2 == 1;
    const auto a = holo ? random_holo_field(rng, n) : random_real_field(rng, n);
    const auto b = holo ? random_holo_field(rng, n) : random_real_field(rng, n);
    const auto d = holo ? random_holo_field(rng, n) : random_real_field(rng, n);
    CHECK((lie_bracket(a, b) + lie_bracket(b, a)).is_zero());
    const auto jac = lie_bracket(a, lie_bracket(b, d)) + lie_bracket(b, lie_bracket(d, a)) + lie_bracket(d, lie_bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("real and imaginary parts of a (1,0) field act like 2Re and 2Im") {
  Rng rng(9);
  const std::size_t n = 2;
  for (int t = 0; t < 10; ++t) {
    const auto zf = random_holo_field(rng, n);
    const auto f = oracle::random_real_polynomial(rng, n, 4, 3);
    const Polynomial zfv = apply(zf, f);
    // for real f: (Z + conj Z) f = 2 Re(Z f), (Z - conj Z)/i f = 2 Im(Z f)
    CHECK(apply(real_part(zf), f) == c(n, 2) * real_part(zfv));
    CHECK(apply(imag_part(zf), f) == c(n, 2) * imag_part(zfv));
  }
}

TEST_CASE("bracket_flag examples") {
  const std::size_t n = 2;
  const auto heis = VarietyIdeal::from(n, {heisenberg_m()});
  const auto f = bracket_flag({heisenberg_cr()}, heis, Point(n));
  CHECK(f.dims == std::vector<std::size_t>{2, 1});
  CHECK(f.depth == 1);
  CHECK(f.finite_type);
  CHECK(f.manifold_dim == 3);

  // complex line: brackets stay in L^0, which is already all of TM
  const auto line = VarietyIdeal::from(n, {xr(n, 2), yr(n, 2)});
  const auto fl = bracket_flag({coordinate_field(n, 1), coordinate_field(n, 3)}, line, Point{{0.2, 0.1}, {0, 0}});
  CHECK(fl.dims == std::vector<std::size_t>{2});
  CHECK(fl.depth == 0);
  CHECK(fl.manifold_dim == 2);
  CHECK(fl.finite_type);

  // totally real plane, no complex tangent fields
  const auto plane = VarietyIdeal::from(n, {yr(n, 1), yr(n, 2)});
  const auto fp = bracket_flag({}, plane, Point(n));
  CHECK(fp.dims == std::vector<std::size_t>{0});
  CHECK_FALSE(fp.finite_type);

  CHECK_THROWS_AS(bracket_flag({coordinate_field(n, 4)}, heis, Point(n)), InputError);

  FlagOptions nearby;
  nearby.nearby_samples = 5;
  CHECK(bracket_flag({heisenberg_cr()}, heis, Point(n), nearby).warnings.empty());
}

TEST_CASE("involutivity_check examples") {
  const std::size_t n = 2;
  SampleOptions opts;
  opts.samples = 10;
  const VarietyIdeal whole;
  CHECK(involutivity_check({coordinate_field(n, 1), coordinate_field(n, 3)}, whole, opts).involutive);
  const auto heis = VarietyIdeal::from(n, {heisenberg_m()});
  const auto h = involutivity_check({heisenberg_cr()}, heis, opts);
  CHECK_FALSE(h.involutive);
  CHECK(h.max_residual > 0.1);
  CHECK(involutivity_check({real_part(heisenberg_cr())}, heis, opts).involutive);
}

TEST_CASE("tangency_order examples") {
  const std::size_t d = 1;
  const Polynomial w = Polynomial::z(d, 0);
  const DefiningFunction we(oracle::c3_example_r());
  const auto curve = tangency_order(we, HoloMap::from(d, {w, w, Polynomial(d)}));
  CHECK(curve.kind == TangencyKind::IdenticallyZero);
  CHECK(curve.composition.is_zero());

  const auto axis = tangency_order(we, HoloMap::from(d, {w, Polynomial(d), Polynomial(d)}));
  CHECK(axis.kind == TangencyKind::Order);
  CHECK(axis.order == 4);
  CHECK(axis.composition == c(d, 1, 4) * (w * conjugate(w)).pow(2));

  const auto ball = tangency_order(DefiningFunction(oracle::ball_r(2)), HoloMap::from(d, {c(d, 1) + w, Polynomial(d)}));
  CHECK(ball.kind == TangencyKind::Order);
  CHECK(ball.order == 1);

  const auto capped = tangency_order(we, HoloMap::from(d, {w, Polynomial(d), Polynomial(d)}), 3);
  CHECK(capped.kind == TangencyKind::ExceedsMaxOrder);

  CHECK_THROWS_AS(tangency_order(DefiningFunction(oracle::ball_r(2)), HoloMap::from(d, {w, Polynomial(d)})), InputError);
  CHECK_THROWS_AS(HoloMap::from(d, {conjugate(w), w}), InputError);
  CHECK_THROWS_AS(tangency_order(we, HoloMap::from(d, {w, w})), InputError);
}

TEST_CASE("tangency order is invariant under w -> c w") {
  Rng rng(55);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2;
    Polynomial r = oracle::random_real_polynomial(rng, n, 5, 4);
    r -= Polynomial::constant(n, r.constant_term());
    if (r.is_zero()) continue;
    const std::size_t d = 1;
    const Polynomial w = Polynomial::z(d, 0);
    std::vector<Polynomial> comps, scaled;
    const GaussianRational s = GaussianRational::fraction(rng.integer(1, 5), rng.integer(1, 5)) *
                               (rng.integer(0, 1) ? GaussianRational(1) : GaussianRational(-1));
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial p(d);
      for (int e = 1; e <= 3; ++e)
        p += Polynomial::constant(d, GaussianRational(mpq_class(rng.integer(-2, 2)), mpq_class(rng.integer(-2, 2)))) * w.pow(e);
      comps.push_back(p);
      Polynomial q(d);
      for (const auto& term : p.terms())
        q += Polynomial::monomial(d, term.monomial, term.coeff) * Polynomial::constant(d, s).pow(term.monomial.degree());
      scaled.push_back(q);
    }
    const DefiningFunction df(r);
    const auto a = tangency_order(df, HoloMap::from(d, comps));
    const auto b = tangency_order(df, HoloMap::from(d, scaled));
    CHECK(a.kind == b.kind);
    CHECK(a.order == b.order);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("stuck chains carry varieties of holomorphic dimension at least q") {
  struct Case {
    Polynomial r;
    std::size_t q;
  };
  const std::vector<Case> cases{{oracle::half_space_r(2), 1}, {oracle::half_space_r(3), 1}, {oracle::half_space_r(3), 2}};
  for (const auto& cs : cases) {
    const DefiningFunction d(cs.r);
    const auto s = run_chain(d, cs.q, 5);
    REQUIRE(s.status == ChainStatus::Stuck);
    const auto v = VarietyIdeal::from(d.dim(), real_variety_equations(s));
    HolDimOptions opts;
    opts.samples = 8;
    CHECK(holomorphic_dimension(d, v, Point(d.dim()), opts).value >= cs.q);
  }
}
