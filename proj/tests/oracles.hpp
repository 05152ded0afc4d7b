#pragma once

// Independent reference computations used to freeze expected values in the
// tests. Nothing here calls into the code paths it is used to check.

#include <complex>
#include <cstddef>
#include <vector>

#include "levikohn/polynomial.hpp"
#include "levikohn/random.hpp"

namespace oracle {

using levikohn::GaussianRational;
using levikohn::Polynomial;
using levikohn::Rng;
using PolyMatrix = std::vector<std::vector<Polynomial>>;
using CVec = std::vector<std::complex<double>>;

// Shorthands for building test polynomials without the parser.
Polynomial z(std::size_t n, std::size_t j);     // 1-based
Polynomial zb(std::size_t n, std::size_t j);    // 1-based
Polynomial abs2(std::size_t n, std::size_t j);  // |z_j|^2
Polynomial c(std::size_t n, long num, long den = 1);

// r = -x3 - |z1|^2|z2|^2 + 1/4|z1|^4 + 3/4|z2|^4 in C^3.
Polynomial c3_example_r();

// Random polynomial with up to `terms` terms of degree <= max_degree and small
// Gaussian-integer-over-small-denominator coefficients.
Polynomial random_polynomial(Rng& rng, std::size_t n, std::size_t terms, unsigned max_degree);
Polynomial random_real_polynomial(Rng& rng, std::size_t n, std::size_t terms, unsigned max_degree);
Polynomial random_monomial_term(Rng& rng, std::size_t n, unsigned max_degree);

// Leibniz permutation expansion.
Polynomial permutation_determinant(const PolyMatrix& m, std::size_t dim);

// Central finite difference of (∂/∂x_j - i ∂/∂y_j)/2 (j 0-based).
std::complex<double> finite_difference_wirtinger(const Polynomial& p, const CVec& point, std::size_t j, double h);

// Classical Gram-Schmidt on Gaussian random vectors: k orthonormal vectors in C^m.
std::vector<CVec> random_orthonormal(Rng& rng, std::size_t m, std::size_t k);

// Random Hermitian m x m with entries ~ N(0,1).
std::vector<CVec> random_hermitian(Rng& rng, std::size_t m);

// trace(Q^* A Q) for orthonormal columns Q.
double restricted_trace(const std::vector<CVec>& a, const std::vector<CVec>& q);

// Direct polynomial evaluation by substituting doubles term by term.
std::complex<double> brute_evaluate(const Polynomial& p, const CVec& point);


// |z|^2 - 1 and 2 x_n.
Polynomial ball_r(std::size_t n);
Polynomial half_space_r(std::size_t n);

// Remainder of f on division by `divisors`, always using the first divisor
// whose leading monomial divides the current leading term.
Polynomial naive_remainder(const Polynomial& f, const std::vector<Polynomial>& divisors);

// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& a, const Polynomial& b);

}  // namespace oracle
