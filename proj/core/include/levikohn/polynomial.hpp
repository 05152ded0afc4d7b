#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "levikohn/gaussian_rational.hpp"
#include "levikohn/monomial.hpp"

namespace levikohn {

struct Term {
  Monomial monomial;
  GaussianRational coeff;
};

// Exact polynomial in z_1..z_n and their formal conjugates with Gaussian-rational
// coefficients. Terms are stored in strictly decreasing grevlex order with no
// zero coefficients, so two polynomials are equal iff their term lists are.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t dim);

  static Polynomial constant(std::size_t dim, const GaussianRational& c);
  // z_j, 0-based.
  static Polynomial z(std::size_t dim, std::size_t j);
  // conj(z_j), 0-based.
  static Polynomial zbar(std::size_t dim, std::size_t j);
  // x_j = (z_j + conj(z_j))/2
  static Polynomial x(std::size_t dim, std::size_t j);
  // y_j = (z_j - conj(z_j))/(2i)
  static Polynomial y(std::size_t dim, std::size_t j);
  static Polynomial monomial(std::size_t dim, const Monomial& m, const GaussianRational& c);
  // Terms in any order, possibly with repeats or zeros.
  static Polynomial from_terms(std::size_t dim, std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  std::size_t num_vars() const { return 2 * dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  // Leading term under grevlex; requires !is_zero().
  const Term& leading() const { return terms_.front(); }
  GaussianRational constant_term() const;
  // Largest total degree of a term, -1 for the zero polynomial.
  int total_degree() const;
  // Smallest total degree of a term, -1 for the zero polynomial.
  int lowest_degree() const;
  // True when no conjugate variable occurs.
  bool is_holomorphic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= GaussianRational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;
  // this - c * m * g, the elementary reduction step.
  void subtract_multiple(const GaussianRational& c, const Monomial& m, const Polynomial& g);
  // Scales so that the leading coefficient is 1.
  Polynomial monic() const;
  // Removes and returns the leading term; requires !is_zero().
  Term pop_leading();
  // Appends a term smaller than every stored term (used by normal-form loops).
  void push_trailing(Term t);

 private:
  void canonicalize();

  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

enum class DerivativeKind { Holomorphic, Antiholomorphic };

// Formal partial derivative in z_var (Holomorphic) or conj(z_var) (Antiholomorphic), 0-based var.
Polynomial wirtinger_d(const Polynomial& p, std::size_t var, DerivativeKind kind);

// Swap z_j <-> conj(z_j) and conjugate every coefficient.
Polynomial conjugate(const Polynomial& p);
bool is_real(const Polynomial& p);
// (p + conj p)/2 and (p - conj p)/(2i); both are real polynomials.
Polynomial real_part(const Polynomial& p);
Polynomial imag_part(const Polynomial& p);

// Exact substitution z_j = point_j, conj(z_j) = conj(point_j).
GaussianRational evaluate(const Polynomial& p, std::span<const GaussianRational> point);
std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> point);

// Re-embeds p into a ring of dimension new_dim >= p.dim(); old variables keep their index.
Polynomial embed(const Polynomial& p, std::size_t new_dim);

// (∂p/∂z_1, ..., ∂p/∂z_n)
std::vector<Polynomial> holomorphic_gradient(const Polynomial& p);

// Human-readable, re-parseable form, e.g. "(1/4)*z1^2*conj(z1)^2 - x".
// `var` is the variable stem ("z" for the ambient space, "w" for map parameters).
std::string to_string(const Polynomial& p, const std::string& var = "z");

}  // namespace levikohn
