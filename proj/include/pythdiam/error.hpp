#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pythdiam {

// Failure categories raised by the library. Every public operation throws
// pythdiam::error carrying one of these.
enum class errc {
  overflow_detected,
  not_a_coprime_pair,
  not_a_perfect_power,
  precondition_violated,
  invalid_triangle,
  not_right_triangle,
  parity_violation,
  range_violation,
  bad_params,
  not_primitive,
  not_pythagorean,
  degenerate_solution,
  exceptional_solution,
  constraint_violated,
  counterexample_found,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::overflow_detected: return "OverflowDetected";
    case errc::not_a_coprime_pair: return "NotACoprimePair";
    case errc::not_a_perfect_power: return "NotAPerfectPower";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::invalid_triangle: return "InvalidTriangle";
    case errc::not_right_triangle: return "NotRightTriangle";
    case errc::parity_violation: return "ParityViolation";
    case errc::range_violation: return "RangeViolation";
    case errc::bad_params: return "BadParams";
    case errc::not_primitive: return "NotPrimitive";
    case errc::not_pythagorean: return "NotPythagorean";
    case errc::degenerate_solution: return "DegenerateSolution";
    case errc::exceptional_solution: return "ExceptionalSolution";
    case errc::constraint_violated: return "ConstraintViolated";
    case errc::counterexample_found: return "CounterexampleFound";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pythdiam
