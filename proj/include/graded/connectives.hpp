#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "graded/error.hpp"
#include "graded/truth_degree.hpp"

namespace graded {

/// The one-parameter negation family  x -> (1 - x) / (1 + lambda x),
/// lambda > -1.  lambda = 0 is the classical negation 1 - x.
///
/// Every member is an involution, strictly decreasing, and maps 0 -> 1 and
/// 1 -> 0.  For lambda > 0 it lies strictly below 1 - x on (0, 1); for
/// lambda in (-1, 0) strictly above.
class NegationFamily {
 public:
  NegationFamily() = default;

  explicit NegationFamily(double lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda) || lambda <= -1.0) {
      throw DomainError("negation parameter must be finite and > -1, got " + std::to_string(lambda));
    }
  }

  static NegationFamily classical() { return NegationFamily{}; }

  double lambda() const { return lambda_; }
  bool is_classical() const { return lambda_ == 0.0; }

  /// Raw evaluation on a double already known to lie in [0, 1].
  double apply(double a) const {
    if (lambda_ == 0.0) return 1.0 - a;
    if (a == 0.0) return 1.0;
    if (a == 1.0) return 0.0;
    return std::clamp((1.0 - a) / (1.0 + lambda_ * a), 0.0, 1.0);
  }

  friend bool operator==(const NegationFamily&, const NegationFamily&) = default;

 private:
  double lambda_ = 0.0;
};

inline TruthDegree negate(const NegationFamily& neg, TruthDegree a) {
  return TruthDegree{neg.apply(a.value())};
}

inline TruthDegree conj(TruthDegree a, TruthDegree b) { return std::min(a, b); }
inline TruthDegree disj(TruthDegree a, TruthDegree b) { return std::max(a, b); }

/// The unique x in (0, 1) with negate(x) == x.
///
/// Solves lambda x^2 + 2x - 1 = 0; written as 1 / (sqrt(1 + lambda) + 1) which
/// equals (sqrt(1 + lambda) - 1) / lambda without the cancellation near 0 and
/// gives exactly 1/2 at lambda = 0.
inline TruthDegree fixed_point(const NegationFamily& neg) {
  return TruthDegree{1.0 / (std::sqrt(1.0 + neg.lambda()) + 1.0)};
}

}  // namespace graded
