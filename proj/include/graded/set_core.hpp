#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graded/connectives.hpp"
#include "graded/error.hpp"
#include "graded/truth_degree.hpp"

namespace graded {

/// Closed real interval [lo, hi] acting as the reference set.
class Universe {
 public:
  Universe(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw DomainError("universe requires finite lo < hi, got [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  double lo_;
  double hi_;
};

/// One knot of a membership curve.  left != right encodes a jump; the curve
/// takes the right value at x itself.
struct Breakpoint {
  double x;
  TruthDegree left;
  TruthDegree right;

  bool is_jump() const { return left != right; }
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear curve with jump-capable breakpoints.
///
/// Between consecutive breakpoints the curve joins right(i) to left(i+1) by a
/// straight line; before the first breakpoint it is constant at left(0), after
/// the last one constant at right(last).  The constructor enforces strictly
/// increasing x and drops redundant knots.
class MembershipCurve {
 public:
  explicit MembershipCurve(std::vector<Breakpoint> breakpoints) : knots_(std::move(breakpoints)) {
    if (knots_.empty()) throw DomainError("membership curve needs at least one breakpoint");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      if (!std::isfinite(knots_[i].x)) throw DomainError("breakpoint x must be finite");
      if (i > 0 && !(knots_[i - 1].x < knots_[i].x)) {
        throw DomainError("breakpoint x-coordinates must be strictly increasing");
      }
    }
    normalize();
  }

  static MembershipCurve constant(TruthDegree value, double at = 0.0) {
    return MembershipCurve({{at, value, value}});
  }

  const std::vector<Breakpoint>& breakpoints() const { return knots_; }

  /// Value at x (right-continuous at jumps).
  TruthDegree at(double x) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                               [](const Breakpoint& b, double v) { return b.x < v; });
    if (it != knots_.end() && it->x == x) return it->right;
    if (it == knots_.begin()) return knots_.front().left;
    if (it == knots_.end()) return knots_.back().right;
    return interpolate(*std::prev(it), *it, x);
  }

  /// Limit of the curve as x is approached from below.
  TruthDegree left_limit(double x) const {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                               [](const Breakpoint& b, double v) { return b.x < v; });
    if (it != knots_.end() && it->x == x) return it->left;
    return at(x);
  }

  friend bool operator==(const MembershipCurve&, const MembershipCurve&) = default;

 private:
  static TruthDegree interpolate(const Breakpoint& a, const Breakpoint& b, double x) {
    const double t = (x - a.x) / (b.x - a.x);
    const double y0 = a.right.value();
    const double y1 = b.left.value();
    return TruthDegree{y0 + t * (y1 - y0)};
  }

  static bool close(double a, double b) { return std::abs(a - b) <= kTolerance; }

  // Removes plain knots that lie on the line through their neighbours and
  // plain end knots adjacent to a flat segment.
  void normalize() {
    bool changed = true;
    while (changed && knots_.size() > 1) {
      changed = false;
      std::vector<Breakpoint> kept;
      kept.reserve(knots_.size());
      for (std::size_t i = 0; i < knots_.size(); ++i) {
        const Breakpoint& k = knots_[i];
        if (k.is_jump()) {
          kept.push_back(k);
          continue;
        }
        const bool first = kept.empty();
        const bool last = i + 1 == knots_.size();
        bool redundant = false;
        if (first && last) {
          redundant = false;
        } else if (first) {
          redundant = close(knots_[i + 1].left.value(), k.right.value());
        } else if (last) {
          redundant = close(kept.back().right.value(), k.left.value());
        } else {
          const Breakpoint& prev = kept.back();
          const Breakpoint& next = knots_[i + 1];
          const double t = (k.x - prev.x) / (next.x - prev.x);
          const double line = prev.right.value() + t * (next.left.value() - prev.right.value());
          redundant = close(line, k.right.value());
        }
        if (redundant) {
          changed = true;
          continue;
        }
        kept.push_back(k);
      }
      knots_ = std::move(kept);
    }
  }

  std::vector<Breakpoint> knots_;
};

/// Structural equality up to kTolerance on every coordinate.
inline bool equivalent(const MembershipCurve& a, const MembershipCurve& b, double tol = kTolerance) {
  const auto& ka = a.breakpoints();
  const auto& kb = b.breakpoints();
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (std::abs(ka[i].x - kb[i].x) > tol) return false;
    if (std::abs(ka[i].left.value() - kb[i].left.value()) > tol) return false;
    if (std::abs(ka[i].right.value() - kb[i].right.value()) > tol) return false;
  }
  return true;
}

/// A fuzzy subset of a real-interval universe.
class FuzzySet {
 public:
  FuzzySet(Universe universe, MembershipCurve curve)
      : universe_(universe), curve_(canonical(universe, std::move(curve))) {}

  static FuzzySet constant(Universe universe, TruthDegree value) {
    return FuzzySet(universe, MembershipCurve::constant(value, universe.lo()));
  }

  const Universe& universe() const { return universe_; }
  const MembershipCurve& curve() const { return curve_; }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  // Breakpoints must lie in the universe.  The left value of a knot at lo is
  // never observed, and a lone plain knot is pinned to lo, so equal functions
  // compare equal.
  static MembershipCurve canonical(const Universe& u, MembershipCurve curve) {
    std::vector<Breakpoint> ks = curve.breakpoints();
    for (const auto& k : ks) {
      if (!u.contains(k.x)) {
        throw DomainError("breakpoint x=" + std::to_string(k.x) + " lies outside universe [" +
                          std::to_string(u.lo()) + ", " + std::to_string(u.hi()) + "]");
      }
    }
    if (ks.front().x == u.lo()) ks.front().left = ks.front().right;
    MembershipCurve out{std::move(ks)};
    if (out.breakpoints().size() == 1 && !out.breakpoints().front().is_jump()) {
      return MembershipCurve::constant(out.breakpoints().front().right, u.lo());
    }
    return out;
  }

  Universe universe_;
  MembershipCurve curve_;
};

/// Membership value A(x).  Right-continuous at jumps.
inline TruthDegree mf_eval(const FuzzySet& set, double x) {
  if (!set.universe().contains(x)) {
    throw DomainError("x=" + std::to_string(x) + " outside universe");
  }
  return set.curve().at(x);
}

// ---------------------------------------------------------------------------
// Crisp sets

/// Finite set of integers.
class DiscreteSet {
 public:
  explicit DiscreteSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
      throw DomainError("discrete set elements must be distinct");
    }
  }

  const std::vector<std::int64_t>& elements() const { return elements_; }
  bool contains(std::int64_t x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

 private:
  std::vector<std::int64_t> elements_;
};

struct Interval {
  double lo;
  double hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }
};

/// Finite union of pairwise disjoint intervals, sorted, inside a universe.
class IntervalSet {
 public:
  IntervalSet(Universe universe, std::vector<Interval> intervals)
      : universe_(universe), intervals_(std::move(intervals)) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      const Interval& iv = intervals_[i];
      if (!(iv.lo <= iv.hi) || !universe_.contains(iv.lo) || !universe_.contains(iv.hi)) {
        throw DomainError("interval [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                          "] is empty-ordered or outside the universe");
      }
      if (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed)) {
        throw DomainError("degenerate interval must be closed on both ends");
      }
      if (i > 0) {
        const Interval& prev = intervals_[i - 1];
        const bool overlap = prev.hi > iv.lo || (prev.hi == iv.lo && prev.hi_closed && iv.lo_closed);
        if (overlap) throw DomainError("intervals must be sorted and pairwise disjoint");
      }
    }
  }

  const Universe& universe() const { return universe_; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  bool contains(double x) const {
    return std::any_of(intervals_.begin(), intervals_.end(), [x](const Interval& iv) { return iv.contains(x); });
  }

 private:
  Universe universe_;
  std::vector<Interval> intervals_;
};

/// A classical subset, described either by listing elements or by intervals.
class CrispSet {
 public:
  CrispSet(DiscreteSet s) : repr_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  CrispSet(IntervalSet s) : repr_(std::move(s)) {}  // NOLINT(google-explicit-constructor)

  bool is_discrete() const { return std::holds_alternative<DiscreteSet>(repr_); }
  const DiscreteSet* discrete() const { return std::get_if<DiscreteSet>(&repr_); }
  const IntervalSet* intervals() const { return std::get_if<IntervalSet>(&repr_); }

 private:
  std::variant<DiscreteSet, IntervalSet> repr_;
};

/// Characteristic function evaluated at an integer point.  Only defined for
/// discrete sets and for interval sets (where the integer is read as a real).
template <std::integral I>
TruthDegree characteristic(const CrispSet& set, I x) {
  if (const auto* d = set.discrete()) {
    return d->contains(static_cast<std::int64_t>(x)) ? TruthDegree::one() : TruthDegree::zero();
  }
  const auto* s = set.intervals();
  const double xr = static_cast<double>(x);
  if (!s->universe().contains(xr)) throw DomainError("x outside universe");
  return s->contains(xr) ? TruthDegree::one() : TruthDegree::zero();
}

/// Characteristic function at a real point; a discrete set rejects reals.
template <std::floating_point F>
TruthDegree characteristic(const CrispSet& set, F x) {
  const auto* s = set.intervals();
  if (s == nullptr) throw DomainError("discrete set expects an integer point");
  const double xr = static_cast<double>(x);
  if (!s->universe().contains(xr)) throw DomainError("x outside universe");
  return s->contains(xr) ? TruthDegree::one() : TruthDegree::zero();
}

/// The characteristic function of an interval set as a fuzzy set with jumps
/// at interior interval endpoints.  Degenerate single-point intervals have no
/// area and vanish.
inline FuzzySet embed_crisp(const CrispSet& set) {
  const auto* s = set.intervals();
  if (s == nullptr) throw UnsupportedVariant("discrete crisp sets cannot be embedded as fuzzy sets");
  const Universe& u = s->universe();
  const auto& ivs = s->intervals();

  auto covered_below = [&](double x) {
    return std::any_of(ivs.begin(), ivs.end(), [x](const Interval& iv) { return iv.lo < x && x <= iv.hi; });
  };
  auto covered_above = [&](double x) {
    return std::any_of(ivs.begin(), ivs.end(), [x](const Interval& iv) { return iv.lo <= x && x < iv.hi; });
  };
  auto degree = [](bool b) { return b ? TruthDegree::one() : TruthDegree::zero(); };

  std::vector<double> xs;
  xs.push_back(u.lo());
  for (const auto& iv : ivs) {
    xs.push_back(iv.lo);
    xs.push_back(iv.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Breakpoint> knots;
  for (double x : xs) {
    if (x == u.hi()) continue;  // the point hi alone has no extent
    knots.push_back({x, degree(covered_below(x)), degree(covered_above(x))});
  }
  return FuzzySet(u, MembershipCurve(std::move(knots)));
}

// ---------------------------------------------------------------------------
// Pointwise algebra

namespace detail {

inline void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
  if (!(a.universe() == b.universe())) throw DomainError("fuzzy sets live on different universes");
}

inline std::vector<double> merged_xs(const MembershipCurve& a, const MembershipCurve& b) {
  std::vector<double> xs;
  xs.reserve(a.breakpoints().size() + b.breakpoints().size());
  for (const auto& k : a.breakpoints()) xs.push_back(k.x);
  for (const auto& k : b.breakpoints()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// min or max of two curves; exact since on each piece between merged knots and
// crossings both operands are linear and one dominates.
template <typename Pick>
FuzzySet combine(const FuzzySet& a, const FuzzySet& b, Pick pick) {
  require_same_universe(a, b);
  const MembershipCurve& ca = a.curve();
  const MembershipCurve& cb = b.curve();
  const std::vector<double> xs = merged_xs(ca, cb);

  std::vector<Breakpoint> out;
  out.reserve(xs.size() * 2);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    out.push_back({x, pick(ca.left_limit(x), cb.left_limit(x)), pick(ca.at(x), cb.at(x))});
    if (i + 1 == xs.size()) break;

    const double xr = xs[i + 1];
    const double a0 = ca.at(x).value();
    const double b0 = cb.at(x).value();
    const double a1 = ca.left_limit(xr).value();
    const double b1 = cb.left_limit(xr).value();
    const double d0 = a0 - b0;
    const double d1 = a1 - b1;
    if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
      const double t = d0 / (d0 - d1);
      const double xc = x + t * (xr - x);
      if (x < xc && xc < xr) {
        const TruthDegree yc{a0 + t * (a1 - a0)};
        out.push_back({xc, yc, yc});
      }
    }
  }
  return FuzzySet(a.universe(), MembershipCurve(std::move(out)));
}

}  // namespace detail

/// Intersection under the min t-norm.
inline FuzzySet pointwise_min(const FuzzySet& a, const FuzzySet& b) {
  return detail::combine(a, b, [](TruthDegree p, TruthDegree q) { return std::min(p, q); });
}

/// Union under the max t-conorm.
inline FuzzySet pointwise_max(const FuzzySet& a, const FuzzySet& b) {
  return detail::combine(a, b, [](TruthDegree p, TruthDegree q) { return std::max(p, q); });
}

inline constexpr double kDefaultComplementTolerance = 1e-9;

/// x -> neg(A(x)).  Exact for the classical negation; otherwise every linear
/// piece is subdivided until the chord is within tol of the rational image at
/// each sub-segment midpoint.
inline FuzzySet complement(const FuzzySet& a, const NegationFamily& neg,
                           double tol = kDefaultComplementTolerance) {
  if (!(tol > 0.0)) throw DomainError("complement tolerance must be positive");
  const auto& ks = a.curve().breakpoints();
  auto image = [&](TruthDegree d) { return TruthDegree{neg.apply(d.value())}; };

  std::vector<Breakpoint> out;
  out.reserve(ks.size());
  constexpr int kMaxDepth = 40;

  // Emits interior knots on (x0, x1) for the segment y0 -> y1 of the operand.
  std::function<void(double, double, double, double, int)> refine =
      [&](double x0, double y0, double x1, double y1, int depth) {
        const double xm = 0.5 * (x0 + x1);
        const double ym = 0.5 * (y0 + y1);
        const double chord = 0.5 * (neg.apply(y0) + neg.apply(y1));
        const double truth = neg.apply(ym);
        if (std::abs(chord - truth) <= tol || depth >= kMaxDepth || !(x0 < xm && xm < x1)) return;
        refine(x0, y0, xm, ym, depth + 1);
        const TruthDegree v{truth};
        out.push_back({xm, v, v});
        refine(xm, ym, x1, y1, depth + 1);
      };

  for (std::size_t i = 0; i < ks.size(); ++i) {
    out.push_back({ks[i].x, image(ks[i].left), image(ks[i].right)});
    if (!neg.is_classical() && i + 1 < ks.size()) {
      refine(ks[i].x, ks[i].right.value(), ks[i + 1].x, ks[i + 1].left.value(), 0);
    }
  }
  return FuzzySet(a.universe(), MembershipCurve(std::move(out)));
}

/// A degree together with the smallest x at which it is attained (or, for a
/// supremum approached from the left of a jump, the jump location).
struct Extremum {
  TruthDegree value;
  double x;
};

namespace detail {

template <typename Better>
Extremum extremum(const FuzzySet& a, Better better) {
  const auto& u = a.universe();
  const auto& ks = a.curve().breakpoints();
  Extremum best{a.curve().at(u.lo()), u.lo()};
  auto offer = [&](TruthDegree v, double x) {
    if (better(v.value(), best.value.value())) best = {v, x};
  };
  for (const auto& k : ks) {
    if (k.x > u.lo()) offer(k.left, k.x);
    offer(k.right, k.x);
  }
  return best;
}

}  // namespace detail

/// Supremum of the membership curve.
inline Extremum height(const FuzzySet& a) {
  return detail::extremum(a, [](double v, double best) { return v > best; });
}

/// Infimum of the membership curve.
inline Extremum floor(const FuzzySet& a) {
  return detail::extremum(a, [](double v, double best) { return v < best; });
}

}  // namespace graded
