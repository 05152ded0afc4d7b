#include <complex>

#include "doctest.h"
#include "levikohn/polynomial.hpp"
#include "oracles.hpp"

using namespace levikohn;
using oracle::abs2;
using oracle::c;
using oracle::z;
using oracle::zb;

TEST_CASE("arith: add, sub, mul") {
  const std::size_t n = 2;
  CHECK((z(n, 1) + zb(n, 1)) + (z(n, 1) - zb(n, 1)) == c(n, 2) * z(n, 1));
  CHECK(abs2(n, 1) * abs2(n, 2) == z(n, 1) * zb(n, 1) * z(n, 2) * zb(n, 2));
  const Polynomial sq = abs2(n, 1) * abs2(n, 1);
  CHECK(sq.size() == 1);
  CHECK(sq.leading().monomial[0] == 2);
  CHECK(sq.leading().monomial[n] == 2);
  CHECK((z(n, 1) - z(n, 1)).is_zero());
}

TEST_CASE("arith: dimension mismatch throws") {
  CHECK_THROWS_AS(z(2, 1) + z(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(z(2, 1) * z(3, 1), std::invalid_argument);
}

TEST_CASE("monomial order is grevlex with z1 < ... < zn < conj(z1) < ... < conj(zn)") {
  const std::size_t n = 2;
  const Polynomial p = z(n, 1) + z(n, 2) + zb(n, 1) + zb(n, 2);
  // leading term is the largest variable
  CHECK(p.leading().monomial == zb(n, 2).leading().monomial);
  CHECK(p.terms().back().monomial == z(n, 1).leading().monomial);
  // degree dominates
  const Polynomial q = z(n, 1) * z(n, 1) + zb(n, 2);
  CHECK(q.leading().monomial.degree() == 2);
}

TEST_CASE("wirtinger_d examples") {
  const std::size_t n = 2;
  CHECK(wirtinger_d(abs2(n, 1), 0, DerivativeKind::Antiholomorphic) == z(n, 1));
  const Polynomial quarter = c(n, 1, 4) * abs2(n, 1) * abs2(n, 1);
  const Polynomial d = wirtinger_d(wirtinger_d(quarter, 0, DerivativeKind::Holomorphic), 0,
                                   DerivativeKind::Antiholomorphic);
  CHECK(d == abs2(n, 1));
  CHECK(wirtinger_d(abs2(n, 1), 1, DerivativeKind::Holomorphic).is_zero());
  CHECK_THROWS_AS(wirtinger_d(abs2(n, 1), 2, DerivativeKind::Holomorphic), std::out_of_range);
}

TEST_CASE("conjugate and is_real") {
  const std::size_t n = 3;
  const Polynomial iz1 = Polynomial::constant(n, GaussianRational::i()) * z(n, 1);
  CHECK(conjugate(iz1) == Polynomial::constant(n, -GaussianRational::i()) * zb(n, 1));
  CHECK(conjugate(abs2(n, 1)) == abs2(n, 1));
  CHECK(is_real(Polynomial::x(n, 2)));
  CHECK(is_real(Polynomial::y(n, 2)));
  CHECK_FALSE(is_real(z(n, 1)));
  CHECK(is_real(oracle::c3_example_r()));

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, n, 20, 4);
    CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("evaluate") {
  const std::size_t n = 2;
  const std::vector<GaussianRational> pt{GaussianRational(1, 1), GaussianRational(0)};
  CHECK(evaluate(abs2(n, 1), pt) == GaussianRational(2));
  const Polynomial trace = c(n, 2) * abs2(n, 2);
  const std::vector<GaussianRational> pt2{GaussianRational(0), GaussianRational(1)};
  CHECK(evaluate(trace, pt2) == GaussianRational(2));

  Rng rng(5);
  const Polynomial p = oracle::random_polynomial(rng, n, 12, 5);
  const std::vector<GaussianRational> origin(n);
  CHECK(evaluate(p, origin) == p.constant_term());
  const std::vector<std::complex<double>> zero(n);
  CHECK(evaluate(p, zero) == p.constant_term().to_complex());
}

TEST_CASE("x and y sugar") {
  const std::size_t n = 1;
  const std::vector<std::complex<double>> pt{{0.3, -0.7}};
  CHECK(evaluate(Polynomial::x(n, 0), pt).real() == doctest::Approx(0.3));
  CHECK(evaluate(Polynomial::y(n, 0), pt).real() == doctest::Approx(-0.7));
  CHECK(std::abs(evaluate(Polynomial::y(n, 0), pt).imag()) < 1e-15);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2;
    const Polynomial a = oracle::random_polynomial(rng, n, 6, 3);
    const Polynomial b = oracle::random_polynomial(rng, n, 6, 3);
    const Polynomial d = oracle::random_polynomial(rng, n, 6, 3);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("Wirtinger product rule, symbolic") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3;
    const Polynomial p = oracle::random_polynomial(rng, n, 8, 4);
    const Polynomial q = oracle::random_polynomial(rng, n, 8, 4);
    for (std::size_t j = 0; j < n; ++j)
      for (auto kind : {DerivativeKind::Holomorphic, DerivativeKind::Antiholomorphic})
        CHECK(wirtinger_d(p * q, j, kind) == wirtinger_d(p, j, kind) * q + p * wirtinger_d(q, j, kind));
  }
}

TEST_CASE("conjugate is an involutive anti-automorphism fixing real polynomials") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2;
    const Polynomial a = oracle::random_polynomial(rng, n, 7, 3);
    const Polynomial b = oracle::random_polynomial(rng, n, 7, 3);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    const Polynomial r = oracle::random_real_polynomial(rng, n, 7, 3);
    CHECK(conjugate(r) == r);
    CHECK(is_real(real_part(a)));
    CHECK(is_real(imag_part(a)));
    CHECK(real_part(a) + Polynomial::constant(n, GaussianRational::i()) * imag_part(a) == a);
  }
}

TEST_CASE("Wirtinger derivative agrees with finite differences") {
  Rng rng(99);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    const Polynomial p = oracle::random_real_polynomial(rng, n, 8, 4);
    oracle::CVec pt(n);
    for (auto& x : pt) x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (std::size_t j = 0; j < n; ++j) {
      const auto exact = evaluate(wirtinger_d(p, j, DerivativeKind::Holomorphic), pt);
      const auto fd = oracle::finite_difference_wirtinger(p, pt, j, 1e-4);
      const double scale = std::max(std::abs(exact), 1.0);
      CHECK(std::abs(exact - fd) / scale <= 1e-6);
      ++checked;
    }
  }
  CHECK(checked == 120);
}

TEST_CASE("to_string is stable and readable") {
  CHECK(to_string(oracle::c3_example_r()) ==
        "(3/4)*z2^2*conj(z2)^2 - z1*z2*conj(z1)*conj(z2) + (1/4)*z1^2*conj(z1)^2 - (1/2)*conj(z3) - (1/2)*z3");
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(to_string(Polynomial::constant(1, GaussianRational::i()) * z(1, 1)) == "i*z1");
}
