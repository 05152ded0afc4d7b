#include "levikohn/poly_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace levikohn {

namespace {

class LaplaceExpander {
 public:
  LaplaceExpander(const PolyMatrix& m, std::size_t dim) : m_(m), dim_(dim) {}

  // det of rows [row, k) against the columns in `mask`.
  Polynomial expand(std::size_t row, std::uint32_t mask) {
    if (row == m_.size()) return Polynomial::constant(dim_, 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial acc(dim_);
    int sign = 1;
    for (std::size_t c = 0; c < m_.size(); ++c) {
      if ((mask & (1U << c)) == 0) continue;
      const Polynomial& entry = m_[row][c];
      if (!entry.is_zero()) {
        Polynomial sub = expand(row + 1, mask & ~(1U << c));
        if (!sub.is_zero()) {
          Polynomial prod = entry * sub;
          if (sign > 0) {
            acc += prod;
          } else {
            acc -= prod;
          }
        }
      }
      sign = -sign;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

 private:
  const PolyMatrix& m_;
  std::size_t dim_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

Polynomial determinant(const PolyMatrix& m, std::size_t dim) {
  const std::size_t k = m.size();
  for (const auto& row : m)
    if (row.size() != k) throw std::invalid_argument("determinant: matrix not square");
  if (k > 31) throw std::invalid_argument("determinant: matrix too large");
  if (k == 0) return Polynomial::constant(dim, 1);
  LaplaceExpander ex(m, dim);
  return ex.expand(0, (k == 32 ? 0U : (1U << k)) - 1U);
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  PolyMatrix out;
  out.reserve(rows.size());
  for (auto r : rows) {
    std::vector<Polynomial> row;
    row.reserve(cols.size());
    for (auto c : cols) row.push_back(m.at(r).at(c));
    out.push_back(std::move(row));
  }
  return out;
}

PolyMatrix conjugate_transpose(const PolyMatrix& m) {
  if (m.empty()) return {};
  PolyMatrix out(m.front().size());
  for (std::size_t j = 0; j < m.front().size(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i) out[j].push_back(conjugate(m[i][j]));
  return out;
}

}  // namespace levikohn
