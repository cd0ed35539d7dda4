#pragma once

#include <cstdint>

namespace pushsum {

/**
 * Stepsize schedule. `Diminishing` is alpha(t) = a / (t+1)^p, which is
 * positive, non-increasing, divergent in sum and square-summable
 * exactly when a > 0 and p in (1/2, 1]; `validate_stepsize` certifies
 * this analytically from the parameters rather than numerically.
 * `Fixed` is the constant 1/sqrt(T) for a declared horizon of T steps.
 */
struct StepSchedule {
  enum class Kind { Diminishing, Fixed };

  Kind kind = Kind::Diminishing;
  double a = 1.0;      // Diminishing scale
  double p = 1.0;      // Diminishing exponent
  std::int64_t T = 0;  // Fixed horizon

  double alpha(std::int64_t t) const;

  static StepSchedule diminishing(double a, double p);
  static StepSchedule fixed(std::int64_t T);
};

/// True iff the parameters certify a usable schedule: diminishing with
/// a > 0 and p in (1/2, 1], or fixed with T >= 1. The boundary p = 1/2
/// is excluded (its squared series diverges).
bool validate_stepsize(const StepSchedule& s);

} // namespace pushsum
