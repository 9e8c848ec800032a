#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "graded/error.hpp"
#include "graded/truth_degree.hpp"

namespace graded::mvl {

/// The value set V_n = {k / (n-1) : k = 0..n-1} of n-valued Łukasiewicz logic.
class LogicValueSet {
 public:
  explicit LogicValueSet(int n) : n_(n) {
    if (n < 2) throw DomainError("n-valued logic requires n >= 2, got " + std::to_string(n));
  }

  int n() const { return n_; }
  int size() const { return n_; }

 private:
  int n_;
};

/// An element k/(n-1) of V_n, held as the exact index k.
class MvlValue {
 public:
  MvlValue(int k, int n) : k_(k), n_(LogicValueSet{n}.n()) {
    if (k < 0 || k > n - 1) {
      throw DomainError("index " + std::to_string(k) + " outside V_" + std::to_string(n));
    }
  }

  static MvlValue falsum(int n) { return {0, n}; }
  static MvlValue verum(int n) { return {n - 1, n}; }

  /// The element of V_n equal to `degree`, or DomainError if none is within
  /// kTolerance.
  static MvlValue from_degree(TruthDegree degree, int n) {
    (void)LogicValueSet{n};
    const double scaled = degree.value() * (n - 1);
    const long k = std::lround(scaled);
    if (std::abs(static_cast<double>(k) / (n - 1) - degree.value()) > kTolerance) {
      throw DomainError("value " + std::to_string(degree.value()) + " is not in V_" + std::to_string(n));
    }
    return {static_cast<int>(k), n};
  }

  int index() const { return k_; }
  int arity() const { return n_; }
  TruthDegree degree() const { return TruthDegree{static_cast<double>(k_) / (n_ - 1)}; }

  /// "k/(n-1)", unreduced.
  std::string fraction() const { return std::to_string(k_) + "/" + std::to_string(n_ - 1); }

  friend bool operator==(const MvlValue&, const MvlValue&) = default;

 private:
  int k_;
  int n_;
};

namespace detail {
inline void require_same_arity(const MvlValue& a, const MvlValue& b) {
  if (a.arity() != b.arity()) {
    throw DomainError("arity mismatch: V_" + std::to_string(a.arity()) + " vs V_" + std::to_string(b.arity()));
  }
}
}  // namespace detail

inline MvlValue mvl_not(const MvlValue& a) { return {a.arity() - 1 - a.index(), a.arity()}; }

inline MvlValue mvl_and(const MvlValue& a, const MvlValue& b) {
  detail::require_same_arity(a, b);
  return {std::min(a.index(), b.index()), a.arity()};
}

inline MvlValue mvl_or(const MvlValue& a, const MvlValue& b) {
  detail::require_same_arity(a, b);
  return {std::max(a.index(), b.index()), a.arity()};
}

/// Łukasiewicz implication min(1, 1 - a + b).
inline MvlValue mvl_implies(const MvlValue& a, const MvlValue& b) {
  detail::require_same_arity(a, b);
  const int top = a.arity() - 1;
  return {std::min(top, top - a.index() + b.index()), a.arity()};
}

enum class Connective { Not, And, Or, Implies };

inline std::string_view to_string(Connective c) {
  switch (c) {
    case Connective::Not: return "not";
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Implies: return "implies";
  }
  return "?";
}

inline Connective connective_from_string(std::string_view s) {
  if (s == "not") return Connective::Not;
  if (s == "and") return Connective::And;
  if (s == "or") return Connective::Or;
  if (s == "implies") return Connective::Implies;
  throw DomainError("unknown connective: " + std::string(s));
}

inline bool is_unary(Connective c) { return c == Connective::Not; }

/// rows[i][j] = op(v_i, v_j) for binary connectives, rows[i][0] = not(v_i)
/// for negation.
struct TruthTable {
  Connective connective;
  int n;
  std::vector<std::vector<MvlValue>> rows;
};

inline TruthTable truth_table(Connective op, int n) {
  (void)LogicValueSet{n};
  TruthTable table{op, n, {}};
  table.rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const MvlValue a{i, n};
    std::vector<MvlValue> row;
    if (is_unary(op)) {
      row.push_back(mvl_not(a));
    } else {
      row.reserve(n);
      for (int j = 0; j < n; ++j) {
        const MvlValue b{j, n};
        switch (op) {
          case Connective::And: row.push_back(mvl_and(a, b)); break;
          case Connective::Or: row.push_back(mvl_or(a, b)); break;
          default: row.push_back(mvl_implies(a, b)); break;
        }
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

/// CSV with fraction labels.  Header `a,not(a)` for negation and
/// `a\b,<v_0>,...` for binary connectives.
inline std::string to_csv(const TruthTable& t) {
  std::string out;
  if (is_unary(t.connective)) {
    out += "a,not(a)\n";
  } else {
    out += "a\\b";
    for (int j = 0; j < t.n; ++j) out += "," + MvlValue{j, t.n}.fraction();
    out += "\n";
  }
  for (int i = 0; i < t.n; ++i) {
    out += MvlValue{i, t.n}.fraction();
    for (const auto& v : t.rows[i]) out += "," + v.fraction();
    out += "\n";
  }
  return out;
}

}  // namespace graded::mvl
