#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>

#include "graded/connectives.hpp"
#include "graded/set_core.hpp"

namespace graded {

enum class Law { Contradiction, ExcludedMiddle };

inline std::string_view to_string(Law law) {
  return law == Law::Contradiction ? "contradiction" : "excluded_middle";
}

/// How far a fuzzy set is from satisfying a classical law.  A defect of 0
/// means the law holds.
struct LawReport {
  Law law;
  TruthDegree defect;
  double witness_x;
  bool holds_classically;
};

/// Height of A ∩ A^C.  Zero exactly when A ∩ A^C = ∅.
inline LawReport contradiction_defect(const FuzzySet& a, const NegationFamily& neg,
                                      double tol = kDefaultComplementTolerance) {
  const Extremum peak = height(pointwise_min(a, complement(a, neg, tol)));
  return {Law::Contradiction, peak.value, peak.x, peak.value.value() <= kTolerance};
}

/// 1 - floor(A ∪ A^C).  Zero exactly when A ∪ A^C = X.
inline LawReport excluded_middle_defect(const FuzzySet& a, const NegationFamily& neg,
                                        double tol = kDefaultComplementTolerance) {
  const Extremum low = floor(pointwise_max(a, complement(a, neg, tol)));
  const TruthDegree defect{1.0 - low.value.value()};
  return {Law::ExcludedMiddle, defect, low.x, defect.value() <= kTolerance};
}

struct SelfComplementCheck {
  bool holds;
  double max_deviation;
};

/// Whether A = A^C within tol, i.e. sup |A(x) - neg(A(x))| <= tol.
///
/// A(x) - neg(A(x)) is monotone in A(x), so on each linear piece the sup is
/// reached at an end; midpoints are sampled as well.
inline SelfComplementCheck self_complementary(const FuzzySet& a, const NegationFamily& neg, double tol) {
  if (!(tol > 0.0)) throw DomainError("self-complement tolerance must be positive");
  const auto& ks = a.curve().breakpoints();
  double worst = 0.0;
  auto probe = [&](double v) { worst = std::max(worst, std::abs(v - neg.apply(v))); };
  for (std::size_t i = 0; i < ks.size(); ++i) {
    probe(ks[i].left.value());
    probe(ks[i].right.value());
    if (i + 1 < ks.size()) probe(0.5 * (ks[i].right.value() + ks[i + 1].left.value()));
  }
  return {worst <= tol, worst};
}

}  // namespace graded
