#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levikohn/linalg.hpp"
#include "levikohn/polynomial.hpp"

namespace levikohn {

using Point = std::vector<std::complex<double>>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;
// Axis-aligned box in R^{2n}, coordinates ordered (x_1..x_n, y_1..y_n).
using Box = std::vector<std::pair<double, double>>;

inline constexpr double kBoundaryTolerance = 1e-8;
inline constexpr double kSignatureTolerance = 1e-9;

// Real layout (x_1..x_n, y_1..y_n) <-> complex coordinates.
std::vector<double> to_real(const Point& p);
Point from_real(const std::vector<double>& x);

// Real defining function r of Ω = {r < 0}.
class DefiningFunction {
 public:
  explicit DefiningFunction(Polynomial r);

  const Polynomial& r() const { return r_; }
  std::size_t dim() const { return r_.dim(); }
  double value_at(const Point& p) const { return evaluate(r_, p).real(); }
  // ∂r(p) = (∂r/∂z_1(p), ..., ∂r/∂z_n(p)).
  linalg::CVector gradient_at(const Point& p) const;
  // Real gradient (∂r/∂x_1..∂r/∂x_n, ∂r/∂y_1..∂r/∂y_n).
  std::vector<double> real_gradient_at(const Point& p) const;
  // (r_{a b̄}(p))
  linalg::CMatrix hessian_at(const Point& p) const;

  const std::vector<Polynomial>& gradient() const { return gradient_; }
  const PolyMatrix& hessian() const { return hessian_; }

 private:
  Polynomial r_;
  std::vector<Polynomial> gradient_;
  PolyMatrix hessian_;
};

class HermitianMetric {
 public:
  static HermitianMetric euclidean(std::size_t n);
  // Constant Hermitian positive definite matrix; validated exactly.
  static HermitianMetric constant(const std::vector<std::vector<GaussianRational>>& h);
  // The metric in which the graph frame L_j = e_j - (r_{z_j}/r_{z_k}) e_k is
  // orthonormal: the pull-back of the Euclidean metric by the projection
  // along the z_k axis. Positive semidefinite on C^n, definite on every
  // complex tangent space where r_{z_k} != 0 (checked per point).
  static HermitianMetric graph(std::size_t n, std::size_t graph_var);

  const linalg::CMatrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  linalg::CMatrix matrix_;
  std::string name_;
};

// Frame of T^{1,0} of the boundary. Symbolic vectors are numerators[j] / denominator;
// `vectors` holds their numeric values at `base` when a base point was supplied.
struct TangentFrame {
  std::size_t graph_var = 0;
  PolyMatrix numerators;
  Polynomial denominator;
  std::optional<Point> base;
  std::vector<linalg::CVector> vectors;
};

// entry(i, j) = numerators[i][j] / denominator
struct LeviFrameMatrix {
  PolyMatrix numerators;
  Polynomial denominator;
};

struct TraceDet {
  Polynomial trace;
  Polynomial det;
  // trace = trace / denominator, det = det / denominator^k; both 1 whenever
  // the frame denominator is a constant.
  Polynomial denominator;
};

struct ClassificationReport {
  Point point;
  std::size_t q = 1;
  std::vector<double> eigenvalues;  // ascending
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;
  double q_margin = 0.0;
  bool pseudoconvex = false;
  bool q_convex = false;
  bool z_q = false;
};

struct BoundarySample {
  std::vector<Point> points;
  std::optional<std::string> warning;
};

// (∂²r/∂z_i∂conj(z_j))_{ij}
PolyMatrix complex_hessian(const DefiningFunction& d);
std::vector<Polynomial> gradient_form(const DefiningFunction& d);

// Symbolic graph frame over the z_{graph_var} direction.
TangentFrame graph_frame(const DefiningFunction& d, std::size_t graph_var);
// Graph frame anchored at p; throws when p is off the boundary or r_{z_graph}(p) = 0.
TangentFrame graph_frame(const DefiningFunction& d, const Point& p, std::size_t graph_var);

LeviFrameMatrix levi_matrix_on_frame(const DefiningFunction& d, const TangentFrame& f);
// Numeric Levi matrix L(v_i, v_j) = Σ v_i[a] r_{a b̄}(p) conj(v_j[b]).
linalg::CMatrix levi_matrix_at(const DefiningFunction& d, const Point& p, const std::vector<linalg::CVector>& frame);

TraceDet frame_trace_det(const LeviFrameMatrix& m);

// Orthonormal basis (with respect to `metric`) of T^C_p bΩ.
std::vector<linalg::CVector> orthonormal_tangent_frame(const DefiningFunction& d, const Point& p,
                                                       const HermitianMetric& metric);

ClassificationReport classify_point(const DefiningFunction& d, const Point& p, std::size_t q,
                                    const HermitianMetric& metric, double tol = kSignatureTolerance);

// Sum of the q smallest eigenvalues of a Hermitian matrix: the minimum trace over q-planes.
double q_convexity_margin(const linalg::CMatrix& levi, std::size_t q);

BoundarySample sample_boundary(const DefiningFunction& d, const Box& box, std::size_t count, std::uint64_t seed);

// Throws InputError unless |r(p)| <= tol.
void require_on_boundary(const DefiningFunction& d, const Point& p, double tol = kBoundaryTolerance);

}  // namespace levikohn
