#pragma once

// Test-only reference implementations.  Nothing here calls into the curve
// algebra under test; curves are evaluated by a straight linear scan over
// raw knot tuples and negations by the closed-form formula.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "graded/dsl.hpp"
#include "graded/set_core.hpp"

namespace oracle {

struct Knot {
  double x, left, right;
};

/// Right-continuous evaluation of a knot list by linear scan.
inline double eval(const std::vector<Knot>& ks, double x) {
  if (x < ks.front().x) return ks.front().left;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (x == ks[i].x) return ks[i].right;
    if (i + 1 < ks.size() && ks[i].x < x && x < ks[i + 1].x) {
      const double t = (x - ks[i].x) / (ks[i + 1].x - ks[i].x);
      return ks[i].right + t * (ks[i + 1].left - ks[i].right);
    }
  }
  return ks.back().right;
}

inline std::vector<Knot> knots_of(const graded::FuzzySet& s) {
  std::vector<Knot> out;
  for (const auto& k : s.curve().breakpoints()) out.push_back({k.x, k.left.value(), k.right.value()});
  return out;
}

inline double sugeno(double lambda, double a) { return (1.0 - a) / (1.0 + lambda * a); }

/// The paper's high-temperature membership, written straight from its formula.
inline double temperature(double x) {
  if (x <= 22) return 0.0;
  if (x >= 30) return 1.0;
  return x / 8.0 - 22.0 / 8.0;
}

struct GridExtremum {
  double value;
  double x;
};

/// sup (or inf) of f over N+1 equally spaced points of [lo, hi], smallest x on ties.
inline GridExtremum grid_extremum(const std::function<double(double)>& f, double lo, double hi, int n, bool sup) {
  GridExtremum best{sup ? -1.0 : 2.0, lo};
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if (sup ? v > best.value : v < best.value) best = {v, x};
  }
  return best;
}

/// Grid search refined around every strict local extremum of the coarse
/// grid, so kinks falling between coarse samples are resolved to ~1e-7 of a
/// grid step.
inline GridExtremum refined_extremum(const std::function<double(double)>& f, double lo, double hi, int n, bool sup) {
  auto score = [sup](double v) { return sup ? v : -v; };
  std::vector<double> xs(n + 1), vs(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = lo + (hi - lo) * i / n;
    vs[i] = f(xs[i]);
  }
  GridExtremum best = grid_extremum(f, lo, hi, n, sup);
  constexpr int kFine = 2000;
  for (int i = 0; i <= n; ++i) {
    const double s = score(vs[i]);
    const double sl = i > 0 ? score(vs[i - 1]) : -INFINITY;
    const double sr = i < n ? score(vs[i + 1]) : -INFINITY;
    if (!(s >= sl && s >= sr && (s > sl || s > sr))) continue;
    const double a = xs[std::max(i - 1, 0)], b = xs[std::min(i + 1, n)];
    for (int j = 0; j <= kFine; ++j) {
      const double x = a + (b - a) * j / kFine;
      const double v = f(x);
      if (score(v) > score(best.value) || (score(v) == score(best.value) && x < best.x)) best = {v, x};
    }
  }
  return best;
}

/// Random curve on [lo, hi] with up to max_knots knots, some of them jumps.
inline graded::FuzzySet random_set(std::mt19937_64& rng, double lo, double hi, int max_knots = 6) {
  std::uniform_real_distribution<double> ux(lo, hi), uy(0.0, 1.0), coin(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, max_knots);
  std::vector<double> xs;
  const int k = count(rng);
  while (static_cast<int>(xs.size()) < k) {
    const double x = ux(rng);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<graded::Breakpoint> knots;
  for (double x : xs) {
    const double l = uy(rng);
    const double r = coin(rng) < 0.3 ? uy(rng) : l;
    knots.push_back({x, graded::TruthDegree{l}, graded::TruthDegree{r}});
  }
  return graded::FuzzySet(graded::Universe{lo, hi}, graded::MembershipCurve(std::move(knots)));
}

/// Random sorted disjoint closed/open intervals inside [lo, hi].
inline graded::IntervalSet random_interval_set(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_real_distribution<double> ux(lo, hi), coin(0.0, 1.0);
  const int k = count(rng);
  std::vector<double> cuts;
  for (int i = 0; i < 2 * k; ++i) cuts.push_back(ux(rng));
  if (coin(rng) < 0.2 && !cuts.empty()) cuts.front() = lo;
  if (coin(rng) < 0.2 && cuts.size() > 1) cuts.back() = hi;
  std::sort(cuts.begin(), cuts.end());
  std::vector<graded::Interval> ivs;
  for (int i = 0; i + 1 < static_cast<int>(cuts.size()); i += 2) {
    if (!(cuts[i] < cuts[i + 1])) continue;
    ivs.push_back({cuts[i], cuts[i + 1], coin(rng) < 0.5, coin(rng) < 0.5});
  }
  // neighbours must stay disjoint when they touch
  for (std::size_t i = 1; i < ivs.size(); ++i) {
    if (ivs[i - 1].hi == ivs[i].lo) ivs[i].lo_closed = !ivs[i - 1].hi_closed && ivs[i].lo_closed;
  }
  return graded::IntervalSet(graded::Universe{lo, hi}, std::move(ivs));
}

/// Boolean reference evaluator over a formula tree, independent of the
/// many-valued kernel.
inline bool boolean_eval(const graded::dsl::Formula& f, const std::map<std::string, bool>& env) {
  using namespace graded::dsl;
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) return env.at(n.name);
        else if constexpr (std::is_same_v<T, Const>) return n.value == 1.0;
        else if constexpr (std::is_same_v<T, Not>) return !boolean_eval(n.arg, env);
        else if constexpr (std::is_same_v<T, And>) return boolean_eval(n.lhs, env) && boolean_eval(n.rhs, env);
        else if constexpr (std::is_same_v<T, Or>) return boolean_eval(n.lhs, env) || boolean_eval(n.rhs, env);
        else return !boolean_eval(n.lhs, env) || boolean_eval(n.rhs, env);
      },
      static_cast<const Node::variant&>(f.node()));
}

/// Random formula over the given variable names; constants drawn from pool.
inline graded::dsl::Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                           const std::vector<double>& constants, int depth) {
  using graded::dsl::Formula;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  const int choice = pick(rng);
  if (choice == 0 || vars.empty()) {
    if (!constants.empty() && (vars.empty() || std::uniform_int_distribution<int>(0, 4)(rng) == 0)) {
      return Formula::constant(constants[std::uniform_int_distribution<std::size_t>(0, constants.size() - 1)(rng)]);
    }
    return Formula::var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  }
  if (choice == 1 && depth <= 0) {
    return Formula::var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  }
  switch (choice) {
    case 1:
    case 2: return Formula::negation(random_formula(rng, vars, constants, depth - 1));
    case 3: return Formula::conjunction(random_formula(rng, vars, constants, depth - 1), random_formula(rng, vars, constants, depth - 1));
    case 4: return Formula::disjunction(random_formula(rng, vars, constants, depth - 1), random_formula(rng, vars, constants, depth - 1));
    default: return Formula::implication(random_formula(rng, vars, constants, depth - 1), random_formula(rng, vars, constants, depth - 1));
  }
}

}  // namespace oracle
