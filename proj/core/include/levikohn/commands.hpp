#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levikohn/problem.hpp"

namespace levikohn {

enum class Command { Levi, Classify, Kohn, HolDim, Brackets, Tangency, CTangent };

Command parse_command(const std::string& name);
std::string to_string(Command c);

// Command-line overrides; unset values fall back to the problem file, then to defaults.
struct CommandFlags {
  std::optional<std::size_t> q;
  std::optional<std::size_t> max_steps;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> metric;
  std::optional<std::size_t> max_order;
  // Selectors for named objects of the problem file.
  std::optional<std::string> map;
  std::optional<std::string> variety;
  std::optional<std::string> point;
  std::vector<std::string> fields;
  // Wall-clock timings make reports non-reproducible, so they are opt-in.
  bool timings = false;
};

enum class ReportFormat { Json, Text };

class Report {
 public:
  struct Tree;

  explicit Report(std::shared_ptr<const Tree> tree) : tree_(std::move(tree)) {}
  const Tree& tree() const { return *tree_; }
  // Exit code implied by the outcome: 0, or 2 when a chain ran out of steps.
  int exit_code() const;

 private:
  std::shared_ptr<const Tree> tree_;
};

// Throws InputError for missing sections or bad selectors; module errors propagate.
Report run_command(Command cmd, const ProblemFile& p, const CommandFlags& flags = {});

// JSON: sorted keys, exact rationals as "num/den" strings, complex numbers as
// {"re", "im"}, trailing newline. Text: the same tree as indented lines.
std::string emit_report(const Report& r, ReportFormat format);

}  // namespace levikohn
