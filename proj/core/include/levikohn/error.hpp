#pragma once

#include <stdexcept>
#include <string>

namespace levikohn {

// Exit-code classes surfaced by the command-line tool.
enum class ErrorClass { Input = 1, Budget = 2, Internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

// Malformed input, violated preconditions, points off the hypersurface.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorClass::Input, what) {}
};

// A configured work limit (Groebner reductions, chain length) was hit.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(ErrorClass::Budget, what) {}
};

}  // namespace levikohn
