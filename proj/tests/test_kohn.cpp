#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "levikohn/error.hpp"
#include "levikohn/kohn.hpp"
#include "levikohn/poly_matrix.hpp"
#include "oracles.hpp"

using namespace levikohn;
using oracle::abs2;
using oracle::c;
using oracle::z;
using oracle::zb;

namespace {

FormModuleMatrix module_of(std::size_t n, const std::vector<std::vector<Polynomial>>& rows) {
  FormModuleMatrix m;
  m.dim = n;
  for (const auto& r : rows) m.rows.push_back({r, RowOrigin::MultiplierGradient, 1, 0});
  return m;
}

Polynomial weakly_pseudoconvex_r() {
  const std::size_t n = 2;
  return abs2(n, 1) + abs2(n, 2) * abs2(n, 2) - c(n, 1);
}

std::multiset<std::string> as_strings(const std::vector<Polynomial>& ps) {
  std::multiset<std::string> out;
  for (const auto& p : ps) out.insert(to_string(p));
  return out;
}

void check_conjugation_closed(const MultiplierChainState& s) {
  std::vector<Polynomial> conj;
  for (const auto& g : s.generators) conj.push_back(conjugate(g.poly));
  CHECK(as_strings(conj) == as_strings(s.generator_polys()));
}

void check_certificates(const MultiplierChainState& s) {
  for (const auto& cert : s.certificates) CHECK(verify_certificate(s, cert));
  if (s.status == ChainStatus::Certified) CHECK(verify_one_certificate(s));
}

// Every generator of the earlier state is in the radical of the later one.
void check_monotone(const MultiplierChainState& before, const MultiplierChainState& after) {
  const auto later = after.generator_polys();
  for (const auto& g : before.generators) CHECK(radical_membership(g.poly, later, after.dim));
}

// Steps manually, checking the per-step properties along the way.
MultiplierChainState run_checked(const Polynomial& r, std::size_t q, std::size_t max_h) {
  const DefiningFunction d(r);
  MultiplierChainState s = init_chain(d, q);
  check_conjugation_closed(s);
  check_certificates(s);
  while (s.status == ChainStatus::Running && s.h < max_h) {
    MultiplierChainState next = step_chain(s);
    check_conjugation_closed(next);
    check_certificates(next);
    check_monotone(s, next);
    s = std::move(next);
  }
  return s;
}

}  // namespace

TEST_CASE("minors: ball rows") {
  const std::size_t n = 2;
  const auto m = module_of(n, {{zb(n, 1), zb(n, 2)}, {c(n, 1), Polynomial(n)}, {Polynomial(n), c(n, 1)}});
  const auto ms = minors(m, 2);
  REQUIRE(ms.size() == 3);
  CHECK(ms[0].value == -zb(n, 2));
  CHECK(ms[1].value == zb(n, 1));
  CHECK(ms[2].value == c(n, 1));
  CHECK(ms[0].rows == std::vector<std::size_t>{0, 1});
  CHECK(ms[2].rows == std::vector<std::size_t>{1, 2});
}

TEST_CASE("minors: zero matrix and single row") {
  const std::size_t n = 3;
  const auto zero = module_of(n, {{Polynomial(n), Polynomial(n), Polynomial(n)}, {Polynomial(n), Polynomial(n), Polynomial(n)}});
  CHECK(minors(zero, 1).empty());
  CHECK(minors(zero, 2).empty());
  const auto single = module_of(n, {{z(n, 1), Polynomial(n), zb(n, 3)}});
  const auto ms = minors(single, 1);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].value == z(n, 1));
  CHECK(ms[1].value == zb(n, 3));
  CHECK_THROWS_AS(minors(single, 0), InputError);
  CHECK_THROWS_AS(minors(single, 4), InputError);
}

TEST_CASE("minors agree with the permutation expansion on random monomial matrices") {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4;
    oracle::PolyMatrix a(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (auto& row : a)
      for (auto& e : row)
        if (rng.uniform() < 0.8) e = oracle::random_monomial_term(rng, n, 3);
    const auto m = module_of(n, a);
    const auto full = minors(m, 4);
    const Polynomial expected = oracle::permutation_determinant(a, n);
    if (expected.is_zero()) {
      CHECK(full.empty());
    } else {
      REQUIRE(full.size() == 1);
      CHECK(full[0].value == expected);
    }
    // every reported 2x2 minor matches the oracle on the same index sets
    for (const auto& mn : minors(m, 2)) {
      oracle::PolyMatrix sub;
      for (std::size_t r : mn.rows) {
        std::vector<Polynomial> row;
        for (std::size_t col : mn.cols) row.push_back(a[r][col]);
        sub.push_back(row);
      }
      CHECK(mn.value == oracle::permutation_determinant(sub, n));
    }
  }
}

TEST_CASE("hermitian_sos") {
  const std::size_t n = 2;
  auto recombine = [n](const SosDecomposition& s) {
    Polynomial sum(n);
    for (std::size_t k = 0; k < s.factors.size(); ++k) sum += s.weights[k] * (s.factors[k] * conjugate(s.factors[k]));
    return sum;
  };
  const auto one = hermitian_sos(c(n, 4) * abs2(n, 2));
  REQUIRE(one.has_value());
  REQUIRE(one->factors.size() == 1);
  CHECK(one->factors[0] == z(n, 2));
  CHECK(one->weights[0] == GaussianRational(4));

  const Polynomial l = z(n, 1) + z(n, 2);
  const auto sq = hermitian_sos(l * conjugate(l));
  REQUIRE(sq.has_value());
  CHECK(sq->factors.size() == 1);

  CHECK_FALSE(hermitian_sos(z(n, 1) + zb(n, 1)).has_value());
  CHECK_FALSE(hermitian_sos(-abs2(n, 1)).has_value());
  CHECK_FALSE(hermitian_sos(abs2(n, 1) - c(n, 1)).has_value());
  CHECK_FALSE(hermitian_sos(z(n, 1)).has_value());

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial w(n);
    for (int k = 0; k < 3; ++k) {
      Polynomial f(n);
      for (int t = 0; t < 3; ++t) {
        Monomial m(2 * n);
        m.increment(static_cast<std::size_t>(rng.integer(0, 1)), static_cast<std::uint16_t>(rng.integer(0, 2)));
        f += Polynomial::monomial(n, m, GaussianRational(mpq_class(rng.integer(-3, 3)), mpq_class(rng.integer(-3, 3))));
      }
      w += c(n, rng.integer(1, 4)) * f * conjugate(f);
    }
    if (w.is_zero()) continue;
    const auto dec = hermitian_sos(w);
    REQUIRE(dec.has_value());
    CHECK(recombine(*dec) == w);
    for (const auto& f : dec->factors) CHECK(f.is_holomorphic());
  }
}

TEST_CASE("init_chain: ball certifies at the first step") {
  const auto s = init_chain(DefiningFunction(oracle::ball_r(2)), 1);
  CHECK(s.status == ChainStatus::Certified);
  CHECK(s.h == 1);
  CHECK(s.module.rows.size() == 3);
  CHECK(s.basis.contains_one());
  CHECK(verify_one_certificate(s));
  CHECK_THROWS_AS(step_chain(s), InputError);
}

TEST_CASE("init_chain: q out of range") {
  CHECK_THROWS_AS(init_chain(DefiningFunction(oracle::ball_r(2)), 2), InputError);
  CHECK_THROWS_AS(init_chain(DefiningFunction(oracle::ball_r(2)), 0), InputError);
}

TEST_CASE("half-space: flat Hessian, no minors, stabilization at the second step") {
  const std::size_t n = 2;
  const DefiningFunction d(oracle::half_space_r(n));
  const auto s1 = init_chain(d, 1);
  CHECK(s1.status == ChainStatus::Running);
  REQUIRE(s1.generators.size() == 1);
  CHECK(s1.generators[0].poly == z(n, 2) + zb(n, 2));

  const auto s2 = step_chain(s1);
  REQUIRE(s2.module.rows.size() == 4);
  CHECK(s2.module.rows[3].entries == std::vector<Polynomial>{Polynomial(n), c(n, 1)});
  CHECK(s2.module.rows[3].origin == RowOrigin::MultiplierGradient);
  CHECK(s2.generators.size() == 1);
  CHECK(s2.status == ChainStatus::Stuck);
  CHECK(s2.h == 2);

  const auto eqs = real_variety_equations(s2);
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0] == z(n, 2) + zb(n, 2));
}

TEST_CASE("run_chain examples") {
  const auto ball = run_chain(DefiningFunction(oracle::ball_r(2)), 1, 5);
  CHECK(ball.status == ChainStatus::Certified);
  CHECK(ball.h == 1);

  const auto flat = run_chain(DefiningFunction(oracle::half_space_r(2)), 1, 5);
  CHECK(flat.status == ChainStatus::Stuck);
  CHECK(flat.h == 2);

  const auto capped = run_chain(DefiningFunction(oracle::half_space_r(2)), 1, 1);
  CHECK(capped.status == ChainStatus::BudgetExhausted);
  CHECK(capped.h == 1);

  const auto weak = run_chain(DefiningFunction(weakly_pseudoconvex_r()), 1, 5);
  CHECK(weak.status == ChainStatus::Certified);
  CHECK(weak.h == 2);
  CHECK(weak.real_radical_used());
  CHECK(radical_membership(c(2, 1), weak.generator_polys(), 2));
  CHECK_FALSE(radical_membership(c(2, 1), weak.generator_polys(weak.generators_per_step[0]), 2));

  CHECK_THROWS_AS(run_chain(DefiningFunction(oracle::ball_r(2)), 1, 0), InputError);
}

TEST_CASE("C^3 example, q = 2: generators are r and the nonzero 2x2 minors") {
  const DefiningFunction d(oracle::c3_example_r());
  const std::size_t n = 3;
  ChainOptions opts;
  const auto s = init_chain(d, 2, opts);
  // the 4x3 matrix: ∂r over the complex Hessian, minors from the oracle
  oracle::PolyMatrix m;
  m.push_back(holomorphic_gradient(d.r()));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Polynomial> row;
    for (std::size_t b = 0; b < n; ++b)
      row.push_back(wirtinger_d(wirtinger_d(d.r(), a, DerivativeKind::Holomorphic), b, DerivativeKind::Antiholomorphic));
    m.push_back(row);
  }
  const auto gens = s.generator_polys();
  const GroebnerBasis gb = groebner_basis(gens, n);
  CHECK(gb.contains(d.r()));
  std::size_t nonzero = 0;
  for (std::size_t r0 = 0; r0 < 4; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 4; ++r1)
      for (std::size_t c0 = 0; c0 < 3; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 3; ++c1) {
          const oracle::PolyMatrix sub{{m[r0][c0], m[r0][c1]}, {m[r1][c0], m[r1][c1]}};
          const Polynomial det = oracle::permutation_determinant(sub, n);
          if (det.is_zero()) continue;
          ++nonzero;
          CHECK(gb.contains(det));
        }
  CHECK(nonzero > 0);
  CHECK(s.generators[0].origin == GeneratorOrigin::DefiningFunction);

  const auto full = run_checked(oracle::c3_example_r(), 2, 5);
  CHECK(full.status == ChainStatus::Certified);
  CHECK(full.h == 2);
}

TEST_CASE("chain properties on every run: closure, certificates, monotonicity") {
  const std::vector<std::pair<Polynomial, std::size_t>> cases{
      {oracle::ball_r(2), 1},
      {oracle::ball_r(3), 1},
      {oracle::ball_r(3), 2},
      {oracle::half_space_r(2), 1},
      {oracle::half_space_r(3), 2},
      {weakly_pseudoconvex_r(), 1},
      {oracle::c3_example_r(), 2},
  };
  for (const auto& [r, q] : cases) {
    const auto s = run_checked(r, q, 4);
    CHECK(s.status != ChainStatus::Running);
    CHECK(s.generators_per_step.size() == s.h);
  }
}

TEST_CASE("certified is stable under a larger step budget") {
  const DefiningFunction d(weakly_pseudoconvex_r());
  const auto a = run_chain(d, 1, 2);
  const auto b = run_chain(d, 1, 6);
  CHECK(a.status == ChainStatus::Certified);
  CHECK(b.status == ChainStatus::Certified);
  CHECK(a.h == b.h);
}

TEST_CASE("determinism: identical runs give identical generator lists") {
  for (int rep = 0; rep < 2; ++rep) {
    const auto a = run_chain(DefiningFunction(oracle::c3_example_r()), 2, 4);
    const auto b = run_chain(DefiningFunction(oracle::c3_example_r()), 2, 4);
    REQUIRE(a.generators.size() == b.generators.size());
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
      CHECK(a.generators[i].poly == b.generators[i].poly);
      CHECK(a.generators[i].origin == b.generators[i].origin);
    }
    CHECK(a.certificates.size() == b.certificates.size());
  }
}

TEST_CASE("radical certificates carry the sum of squares and re-verify") {
  const auto s = run_chain(DefiningFunction(weakly_pseudoconvex_r()), 1, 5);
  REQUIRE_FALSE(s.certificates.empty());
  const auto& cert = s.certificates.front();
  CHECK(cert.rule == RadicalRule::SumOfSquares);
  CHECK(cert.witness == abs2(2, 2));
  CHECK(verify_certificate(s, cert));

  // tampering is detected
  RadicalCertificate bad = cert;
  bad.weights[0] = GaussianRational(-1);
  CHECK_FALSE(verify_certificate(s, bad));
  bad = cert;
  bad.witness = abs2(2, 1);
  CHECK_FALSE(verify_certificate(s, bad));
  bad = cert;
  bad.cofactors.reset();
  CHECK(verify_certificate(s, bad));
}

TEST_CASE("Groebner budget inside the chain surfaces with the partial state") {
  ChainOptions opts;
  opts.groebner.max_reductions = 5;
  try {
    run_chain(DefiningFunction(oracle::c3_example_r()), 2, 5, opts);
    FAIL("expected a budget error");
  } catch (const ChainBudgetError& e) {
    CHECK(e.error_class() == ErrorClass::Budget);
    CHECK(e.partial().dim == 3);
  }
}

TEST_CASE("degree cap drops generators with a warning") {
  ChainOptions opts;
  opts.max_degree = 2;
  const auto s = run_chain(DefiningFunction(oracle::c3_example_r()), 2, 3, opts);
  CHECK_FALSE(s.warnings.empty());
  for (const auto& g : s.generators)
    if (g.origin != GeneratorOrigin::DefiningFunction) CHECK(g.poly.total_degree() <= 2);
}
