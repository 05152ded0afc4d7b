#pragma once

#include <cstddef>
#include <vector>

#include "levikohn/polynomial.hpp"

namespace levikohn {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Exact determinant by cofactor (Laplace) expansion along the leading row,
// memoized on the set of remaining columns.
Polynomial determinant(const PolyMatrix& m, std::size_t dim);

// Rows `rows`, columns `cols` of m.
PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

PolyMatrix conjugate_transpose(const PolyMatrix& m);

}  // namespace levikohn
