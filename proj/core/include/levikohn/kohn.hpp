#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "levikohn/error.hpp"
#include "levikohn/groebner.hpp"
#include "levikohn/levi.hpp"
#include "levikohn/polynomial.hpp"

namespace levikohn {

enum class RowOrigin { DefiningGradient, HessianRow, MultiplierGradient };

// A (1,0)-form in the dz basis; `source` is the Hessian row index or the
// generator index it was differentiated from.
struct ModuleRow {
  std::vector<Polynomial> entries;
  RowOrigin origin = RowOrigin::DefiningGradient;
  std::size_t step = 1;
  std::size_t source = 0;
};

struct FormModuleMatrix {
  std::size_t dim = 0;
  std::vector<ModuleRow> rows;
};

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Polynomial value;
};

// Nonzero k×k minors, rows then columns enumerated lexicographically.
// `first_new_row` restricts to row sets that touch a row at or beyond it.
std::vector<Minor> minors(const FormModuleMatrix& m, std::size_t k, std::size_t first_new_row = 0);

enum class GeneratorOrigin { DefiningFunction, Minor, Conjugate, RealRadical, PowerRadical };

struct Generator {
  Polynomial poly;
  GeneratorOrigin origin = GeneratorOrigin::DefiningFunction;
  std::size_t step = 1;
  std::vector<std::size_t> minor_rows;
  std::vector<std::size_t> minor_cols;
  // Index of the conjugate partner, when the generator is not real.
  std::optional<std::size_t> partner;
  // Index into the certificate list for radical generators.
  std::optional<std::size_t> certificate;
};

enum class RadicalRule { SumOfSquares, Power };

// Witness w lies in the ideal spanned by the first `ideal_size` generators.
//   SumOfSquares: w = Σ weights_k · factors_k · conj(factors_k), weights > 0;
//                 each factor (and its conjugate) is adjoined.
//   Power:        factors_0^exponent is a multiple of the monomial w.
// `cofactors`, when present, give w = Σ cofactors_i · gens_i explicitly.
struct RadicalCertificate {
  RadicalRule rule = RadicalRule::SumOfSquares;
  std::size_t step = 1;
  Polynomial witness;
  std::vector<GaussianRational> weights;
  std::vector<Polynomial> factors;
  unsigned exponent = 1;
  std::size_t ideal_size = 0;
  std::optional<std::vector<Polynomial>> cofactors;
};

enum class ChainStatus { Running, Certified, Stuck, BudgetExhausted };

struct MultiplierChainState {
  std::size_t dim = 0;
  std::size_t q = 1;
  std::size_t h = 1;
  Polynomial r;
  FormModuleMatrix module;
  std::vector<Generator> generators;
  GroebnerBasis basis;
  std::vector<RadicalCertificate> certificates;
  ChainStatus status = ChainStatus::Running;
  std::vector<std::string> warnings;
  // Generators of 1 ∈ I: 1 = Σ one_cofactors_i · generators_i (set when certified).
  std::optional<std::vector<Polynomial>> one_cofactors;
  // Number of generators present at the end of each step (index h-1).
  std::vector<std::size_t> generators_per_step;

  bool real_radical_used() const { return !certificates.empty(); }
  std::vector<Polynomial> generator_polys(std::size_t count) const;
  std::vector<Polynomial> generator_polys() const { return generator_polys(generators.size()); }
};

struct ChainOptions {
  GroebnerOptions groebner;
  // Generators above this total degree are dropped with a warning.
  int max_degree = 40;
  // Compute explicit cofactors for 1 when certified.
  bool lift_certificate = true;
};

// Gröbner budget exhausted inside the chain; carries the state reached so far.
class ChainBudgetError : public BudgetError {
 public:
  ChainBudgetError(const std::string& what, MultiplierChainState partial)
      : BudgetError(what), partial_(std::move(partial)) {}
  const MultiplierChainState& partial() const { return partial_; }

 private:
  MultiplierChainState partial_;
};

MultiplierChainState init_chain(const DefiningFunction& d, std::size_t q, const ChainOptions& opts = {});
MultiplierChainState step_chain(const MultiplierChainState& s, const ChainOptions& opts = {});
MultiplierChainState run_chain(const DefiningFunction& d, std::size_t q, std::size_t max_h,
                               const ChainOptions& opts = {});

// Re-checks a certificate against the generators of `s` from scratch.
bool verify_certificate(const MultiplierChainState& s, const RadicalCertificate& c,
                        const GroebnerOptions& opts = {});
// Re-checks 1 = Σ one_cofactors_i · g_i.
bool verify_one_certificate(const MultiplierChainState& s);

// Real equations (real and imaginary parts of the generators) cutting out V(I).
std::vector<Polynomial> real_variety_equations(const MultiplierChainState& s);

// Hermitian sum-of-squares decomposition w = Σ d_k |ℓ_k|^2 with d_k > 0 and
// ℓ_k holomorphic, if one exists (exact Gram-matrix LDL*).
struct SosDecomposition {
  std::vector<GaussianRational> weights;
  std::vector<Polynomial> factors;
};
std::optional<SosDecomposition> hermitian_sos(const Polynomial& w);

std::string to_string(ChainStatus s);
std::string to_string(GeneratorOrigin o);
std::string to_string(RowOrigin o);
std::string to_string(RadicalRule r);

}  // namespace levikohn
