#pragma once

#include <stdexcept>
#include <string>

namespace dualrect {

enum class Errc {
  ZeroDenominator,
  DivisionByZero,
  Parse,
  NonPositiveSide,
  NotDual,
  Inconsistent,        // bd = 4
  NoPositiveSolution,  // bd < 4
  NegativeInput,
  Precondition,
  OffHyperbola,
  NotSelfDual,
  DegenerateTriangle,
  OffSurface,
  CoincidentPoints,
  DegenerateLine,
};

const char* to_string(Errc code) noexcept;

// Every recoverable mathematical failure in the library is reported as a
// DomainError carrying a machine-checkable code.
class DomainError : public std::domain_error {
 public:
  DomainError(Errc code, const std::string& what)
      : std::domain_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dualrect
