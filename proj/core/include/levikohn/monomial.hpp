#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>

namespace levikohn {

// Ambient dimension n is at most 9 (z1..z9); one extra holomorphic slot is
// reserved for the auxiliary variable of the Rabinowitsch trick.
inline constexpr std::size_t kMaxDimension = 10;
inline constexpr std::size_t kMaxVariables = 2 * kMaxDimension;

// Exponent vector over 2n indeterminates: slots [0, n) hold z_1..z_n and
// slots [n, 2n) hold conj(z_1)..conj(z_n).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    assert(nvars <= kMaxVariables);
  }

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, std::uint16_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }
  void increment(std::size_t i, std::uint16_t by = 1) {
    exps_[i] = static_cast<std::uint16_t>(exps_[i] + by);
    degree_ += by;
  }

  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& m) const {
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars_; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic comparison with slot 0 the smallest variable,
// i.e. z_1 < ... < z_n < conj(z_1) < ... < conj(z_n).
// Returns >0 when a > b, <0 when a < b, 0 when equal.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

}  // namespace levikohn
