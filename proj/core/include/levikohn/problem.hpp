#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levikohn/gaussian_rational.hpp"
#include "levikohn/levi.hpp"
#include "levikohn/polynomial.hpp"
#include "levikohn/variety.hpp"

namespace levikohn {

struct SamplingSpec {
  Box box;  // 2n intervals, (x_1..x_n, y_1..y_n)
  std::size_t count = 0;
  std::uint64_t seed = 1;
};

struct Budgets {
  std::optional<std::size_t> max_h;
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> groebner;
};

// Everything a command may need, already parsed into exact objects.
// Named sections are kept in std::map so iteration order is stable.
struct ProblemFile {
  std::size_t dimension = 0;
  std::optional<Polynomial> defining_function;
  std::map<std::string, std::vector<std::vector<GaussianRational>>> metrics;
  std::map<std::string, std::vector<Polynomial>> varieties;
  std::map<std::string, PolyVectorField> vector_fields;
  std::map<std::string, HoloMap> holo_maps;
  std::map<std::string, std::vector<GaussianRational>> points;
  std::optional<std::size_t> q;
  std::optional<SamplingSpec> sampling;
  Budgets budgets;
};

// UTF-8 JSON problem file:
// {
//   "dimension": 3,
//   "defining_function": "r = -x3 - z1*conj(z1)*z2*conj(z2) + ...",
//   "metric": [["1","0"],["0","1"]]            or {"name": [[...]], ...}
//   "varieties": {"V": ["x2"]},
//   "vector_fields": {"L": {"kind": "holomorphic", "coeffs": ["1", "2*i*conj(z1)"]}},
//   "holo_maps": {"curve": ["w1", "w1", "0"]}  or {"curve": {"params": 1, "components": [...]}},
//   "points": {"origin": ["0", "0", "0"]},
//   "q": 2,
//   "sampling": {"box": [[-0.5, 0.5]], "count": 200, "seed": 7},
//   "budgets": {"max_h": 8, "max_order": 24, "groebner": 100000}
// }
// A single box interval applies to every real coordinate. Errors are InputError
// and name the offending section.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);

}  // namespace levikohn
