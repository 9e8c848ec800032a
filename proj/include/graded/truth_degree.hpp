#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <string>

#include "graded/error.hpp"

namespace graded {

/// Absolute tolerance used for degree comparisons throughout the library.
inline constexpr double kTolerance = 1e-12;

/// A degree of truth in [0, 1].
///
/// Values within kTolerance outside the interval are clamped; anything further
/// out (or NaN) is rejected with DomainError.
class TruthDegree {
 public:
  constexpr TruthDegree() = default;

  explicit TruthDegree(double value) : value_(checked(value)) {}

  static constexpr TruthDegree zero() { return TruthDegree{}; }
  static TruthDegree one() { return TruthDegree{1.0}; }

  constexpr double value() const { return value_; }
  constexpr explicit operator double() const { return value_; }

  friend constexpr auto operator<=>(TruthDegree, TruthDegree) = default;

 private:
  static double checked(double v) {
    if (std::isnan(v) || v < -kTolerance || v > 1.0 + kTolerance) {
      throw DomainError("truth degree out of [0,1]: " + std::to_string(v));
    }
    return std::clamp(v, 0.0, 1.0);
  }

  double value_ = 0.0;
};

}  // namespace graded
