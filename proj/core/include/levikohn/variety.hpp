#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levikohn/groebner.hpp"
#include "levikohn/levi.hpp"
#include "levikohn/linalg.hpp"
#include "levikohn/polynomial.hpp"

namespace levikohn {

using RealVector = std::vector<double>;

inline constexpr double kSubspaceTolerance = 1e-7;

// Real polynomials cutting out a subset of C^n.
struct VarietyIdeal {
  std::vector<Polynomial> generators;

  // Validates that every generator is real and of dimension n.
  static VarietyIdeal from(std::size_t n, std::vector<Polynomial> generators);
};

// V ∪ {r}
VarietyIdeal with_boundary(const VarietyIdeal& v, const DefiningFunction& d);

// Rows (∂f/∂x_1..∂f/∂x_n, ∂f/∂y_1..∂f/∂y_n) at p.
std::vector<RealVector> real_jacobian_at(const std::vector<Polynomial>& gens, const Point& p);

// Gauss-Newton with minimal-norm steps onto {f = 0 for all f}. Returns nullopt
// unless max |f| <= tol within max_iter iterations.
std::optional<Point> project_to_variety(const std::vector<Polynomial>& gens, const Point& start, double tol = 1e-12,
                                        int max_iter = 60);

// Orthonormal ambient basis of the null space of the Levi form on T^C_p bΩ.
std::vector<linalg::CVector> levi_kernel_at(const DefiningFunction& d, const Point& p, double tol = kSubspaceTolerance);

struct TangentSpaces {
  std::vector<RealVector> real_basis;            // T_pV in the (x, y) layout
  std::vector<linalg::CVector> complex_basis;    // T^C_pV = T_pV ∩ J T_pV
};

TangentSpaces tangent_spaces_at(const VarietyIdeal& v, const Point& p, double tol = kSubspaceTolerance);

struct HolDimOptions {
  double radius = 0.1;
  std::size_t samples = 32;
  std::uint64_t seed = 1;
  double tol = kSubspaceTolerance;
  // radii radius * 2^-k for k = 0..levels
  std::size_t levels = 4;
};

struct HolDimLevel {
  double radius = 0.0;
  std::size_t points = 0;
  std::size_t excluded_singular = 0;
  std::size_t min_dim = 0;
  std::size_t max_dim = 0;
};

struct HolDimReport {
  std::size_t value = 0;
  Point base;
  std::vector<HolDimLevel> levels;
  std::vector<std::string> warnings;
};

// dim_C(T^C_z V ∩ Ker L(z)) at one point of V ∩ bΩ.
std::size_t holomorphic_dimension_at(const DefiningFunction& d, const VarietyIdeal& v, const Point& z, double tol);

HolDimReport holomorphic_dimension(const DefiningFunction& d, const VarietyIdeal& v, const Point& z0,
                                   const HolDimOptions& opts = {});

struct SampleOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 1;
  double tol = kSubspaceTolerance;
  Point center;  // empty: origin
  double radius = 1.0;
};

struct TangentialCheck {
  bool complex_tangential = false;
  double max_violation = 0.0;
  std::size_t points = 0;
};

// TM ⊂ T^C bΩ on sampled points of M. Throws InputError when M leaves bΩ.
TangentialCheck complex_tangential_check(const DefiningFunction& d, const VarietyIdeal& m,
                                         const SampleOptions& opts = {});

enum class FieldKind { Real, Holomorphic };

// Real: 2n coefficients on ∂/∂x_1..∂/∂x_n, ∂/∂y_1..∂/∂y_n (real polynomials).
// Holomorphic: n coefficients on ∂/∂z_1..∂/∂z_n (type (1,0)).
struct PolyVectorField {
  FieldKind kind = FieldKind::Real;
  std::vector<Polynomial> coeffs;

  static PolyVectorField real(std::vector<Polynomial> coeffs);
  static PolyVectorField holomorphic(std::vector<Polynomial> coeffs);
  std::size_t dim() const;
  bool is_zero() const;
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.kind == b.kind && a.coeffs == b.coeffs;
  }
};

// X(f)
Polynomial apply(const PolyVectorField& x, const Polynomial& f);
PolyVectorField lie_bracket(const PolyVectorField& x, const PolyVectorField& y);
PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
// 2 Re Z and 2 Im Z of a (1,0) field, as real fields.
PolyVectorField real_part(const PolyVectorField& z);
PolyVectorField imag_part(const PolyVectorField& z);
// Real fields unchanged; holomorphic fields replaced by their real and imaginary parts.
std::vector<PolyVectorField> to_real_fields(const std::vector<PolyVectorField>& fields);
RealVector evaluate(const PolyVectorField& x, const Point& p);

struct BracketFlag {
  std::vector<std::size_t> dims;  // p_0, p_1, ..., p_s
  std::size_t depth = 0;          // s
  bool finite_type = false;
  std::size_t manifold_dim = 0;   // dim_R T_pM
  Point base;
  std::vector<std::string> warnings;
};

struct FlagOptions {
  std::size_t max_depth = 4;
  double tol = kSubspaceTolerance;
  // Nearby points of M at which the flag is recomputed as a consistency check.
  std::size_t nearby_samples = 0;
  double nearby_radius = 1e-3;
  std::uint64_t seed = 1;
  GroebnerOptions groebner;
};

BracketFlag bracket_flag(const std::vector<PolyVectorField>& fields, const VarietyIdeal& m, const Point& p,
                         const FlagOptions& opts = {});

struct InvolutivityCheck {
  bool involutive = false;
  double max_residual = 0.0;
  std::size_t points = 0;
  std::vector<std::string> warnings;
};

InvolutivityCheck involutivity_check(const std::vector<PolyVectorField>& fields, const VarietyIdeal& m,
                                     const SampleOptions& opts = {});

// φ: C^d -> C^n, holomorphic polynomials in w_1..w_d.
struct HoloMap {
  std::size_t params = 1;
  std::vector<Polynomial> components;

  static HoloMap from(std::size_t params, std::vector<Polynomial> components);
};

// r ∘ φ as a polynomial in (w, conj w).
Polynomial compose(const Polynomial& r, const HoloMap& phi);

enum class TangencyKind { Order, IdenticallyZero, ExceedsMaxOrder };

struct TangencyOrder {
  TangencyKind kind = TangencyKind::Order;
  std::size_t order = 0;
  Polynomial composition;
};

TangencyOrder tangency_order(const DefiningFunction& d, const HoloMap& phi, std::size_t max_order = 24);

std::string to_string(TangencyKind k);
std::string to_string(FieldKind k);

}  // namespace levikohn
