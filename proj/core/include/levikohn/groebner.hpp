#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "levikohn/polynomial.hpp"

namespace levikohn {

struct GroebnerOptions {
  // Upper bound on elementary reduction steps per computation.
  std::size_t max_reductions = 100000;
};

// Reduced Groebner basis under grevlex, z and conj(z) treated as 2n
// independent indeterminates. Every element is monic; elements are sorted by
// decreasing leading monomial, so the basis is unique for a given ideal.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t dim, std::vector<Polynomial> reduced) : dim_(dim), basis_(std::move(reduced)) {}

  static constexpr std::string_view order() { return "grevlex"; }

  std::size_t dim() const { return dim_; }
  const std::vector<Polynomial>& polynomials() const { return basis_; }
  bool empty() const { return basis_.empty(); }
  bool contains_one() const { return basis_.size() == 1 && basis_.front().is_constant(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  std::size_t dim_ = 0;
  std::vector<Polynomial> basis_;
};

// Throws BudgetError when the reduction budget is exceeded.
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, std::size_t dim, const GroebnerOptions& opts = {});

// f ∈ rad(I) iff 1 ∈ <I, 1 - t f> with t a fresh variable (Rabinowitsch).
bool radical_membership(const Polynomial& f, std::span<const Polynomial> ideal, std::size_t dim,
                        const GroebnerOptions& opts = {});

// Groebner basis that remembers how each element is built from the input
// generators, so that membership comes with explicit cofactors.
class LiftingBasis {
 public:
  LiftingBasis(std::span<const Polynomial> gens, std::size_t dim, const GroebnerOptions& opts = {});

  // Cofactors c with Σ c_i gens_i = f, or nullopt when f is not in the ideal.
  std::optional<std::vector<Polynomial>> represent(const Polynomial& f) const;

 private:
  struct Element {
    Polynomial poly;
    std::vector<Polynomial> cofactors;
  };
  std::size_t dim_;
  std::size_t ngens_;
  std::vector<Element> basis_;
  GroebnerOptions opts_;
};

// Σ cofactors_i gens_i
Polynomial combine(std::span<const Polynomial> cofactors, std::span<const Polynomial> gens, std::size_t dim);

}  // namespace levikohn
