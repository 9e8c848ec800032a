#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "graded/connectives.hpp"
#include "graded/error.hpp"
#include "graded/mvl.hpp"
#include "graded/truth_degree.hpp"

namespace graded::dsl {

struct Node;

/// Immutable propositional formula.  Copies share structure.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula constant(double degree);
  static Formula negation(Formula arg);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  const Node& node() const { return *node_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};
struct Const {
  double value;
  friend bool operator==(const Const&, const Const&) = default;
};
struct Not {
  Formula arg;
  friend bool operator==(const Not&, const Not&) = default;
};
struct And {
  Formula lhs, rhs;
  friend bool operator==(const And&, const And&) = default;
};
struct Or {
  Formula lhs, rhs;
  friend bool operator==(const Or&, const Or&) = default;
};
struct Implies {
  Formula lhs, rhs;
  friend bool operator==(const Implies&, const Implies&) = default;
};

struct Node : std::variant<Var, Const, Not, And, Or, Implies> {
  using variant::variant;
};

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return static_cast<const Node::variant&>(*a.node_) == static_cast<const Node::variant&>(*b.node_);
}

inline bool valid_identifier(std::string_view s) {
  auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  if (s.empty() || !head(s.front())) return false;
  for (char c : s.substr(1)) {
    if (!tail(c)) return false;
  }
  return true;
}

inline Formula Formula::var(std::string name) {
  if (!valid_identifier(name)) throw DomainError("invalid variable name: '" + name + "'");
  return Formula(std::make_shared<const Node>(Var{std::move(name)}));
}
inline Formula Formula::constant(double degree) {
  return Formula(std::make_shared<const Node>(Const{TruthDegree{degree}.value()}));
}
inline Formula Formula::negation(Formula arg) { return Formula(std::make_shared<const Node>(Not{std::move(arg)})); }
inline Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(And{std::move(lhs), std::move(rhs)}));
}
inline Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Or{std::move(lhs), std::move(rhs)}));
}
inline Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Implies{std::move(lhs), std::move(rhs)}));
}

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { Identifier, Number, Bang, Amp, Pipe, Arrow, LParen, RParen, End };

inline std::string_view describe(TokenKind k) {
  switch (k) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset;
};

/// Malformed formula text.  offset is the byte position of the offending
/// token; expected lists the token kinds that would have been accepted.
class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t offset, std::vector<TokenKind> expected, std::string_view found)
      : DomainError(message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<TokenKind>& expected() const { return expected_; }

 private:
  static std::string message(std::size_t offset, const std::vector<TokenKind>& expected, std::string_view found) {
    std::string m = "syntax error at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) m += i + 1 == expected.size() ? " or " : ", ";
      m += describe(expected[i]);
    }
    m += ", found ";
    m += found;
    return m;
  }

  std::size_t offset_;
  std::vector<TokenKind> expected_;
};

/// Numeric literal outside [0, 1].
class RangeError : public DomainError {
 public:
  RangeError(std::size_t offset, std::string_view literal)
      : DomainError("literal " + std::string(literal) + " at offset " + std::to_string(offset) +
                    " is outside [0,1]"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({TokenKind::Identifier, text.substr(start, i - start), start});
    } else if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < text.size() && is_digit(text[j])) {
          i = j;
          while (i < text.size() && is_digit(text[i])) ++i;
        }
      }
      out.push_back({TokenKind::Number, text.substr(start, i - start), start});
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      i += 2;
      out.push_back({TokenKind::Arrow, text.substr(start, 2), start});
    } else {
      TokenKind kind;
      switch (c) {
        case '!': kind = TokenKind::Bang; break;
        case '&': kind = TokenKind::Amp; break;
        case '|': kind = TokenKind::Pipe; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        default:
          throw SyntaxError(start,
                            {TokenKind::Identifier, TokenKind::Number, TokenKind::Bang, TokenKind::Amp,
                             TokenKind::Pipe, TokenKind::Arrow, TokenKind::LParen, TokenKind::RParen},
                            "'" + std::string(1, c) + "'");
      }
      ++i;
      out.push_back({kind, text.substr(start, 1), start});
    }
  }
  out.push_back({TokenKind::End, {}, text.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser
//
//   formula := disj ( '->' formula )?
//   disj    := conj ( '|' conj )*
//   conj    := unary ( '&' unary )*
//   unary   := '!' unary | atom
//   atom    := identifier | number | '(' formula ')'

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse_all() {
    Formula f = implication();
    expect(TokenKind::End, {TokenKind::Amp, TokenKind::Pipe, TokenKind::Arrow, TokenKind::End});
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(std::vector<TokenKind> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + std::string(t.text) + "'";
    throw SyntaxError(t.offset, std::move(expected), found);
  }

  void expect(TokenKind kind, std::vector<TokenKind> expected) {
    if (peek().kind != kind) fail(std::move(expected));
    ++pos_;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == TokenKind::Arrow) {
      ++pos_;
      return Formula::implication(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == TokenKind::Pipe) {
      ++pos_;
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == TokenKind::Amp) {
      ++pos_;
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == TokenKind::Bang) {
      ++pos_;
      return Formula::negation(unary());
    }
    return atom();
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier:
        ++pos_;
        return Formula::var(std::string(t.text));
      case TokenKind::Number: {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || v > 1.0) {
          throw RangeError(t.offset, t.text);
        }
        ++pos_;
        return Formula::constant(v);
      }
      case TokenKind::LParen: {
        ++pos_;
        Formula inner = implication();
        expect(TokenKind::RParen, {TokenKind::Amp, TokenKind::Pipe, TokenKind::Arrow, TokenKind::RParen});
        return inner;
      }
      default:
        fail({TokenKind::Identifier, TokenKind::Number, TokenKind::Bang, TokenKind::LParen});
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the whole of `text`; throws SyntaxError or RangeError.
inline Formula parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

namespace detail {

enum Precedence : int { kImplies = 1, kOr = 2, kAnd = 3, kNot = 4, kAtom = 5 };

inline int precedence(const Formula& f) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Implies>) return kImplies;
        if constexpr (std::is_same_v<T, Or>) return kOr;
        if constexpr (std::is_same_v<T, And>) return kAnd;
        if constexpr (std::is_same_v<T, Not>) return kNot;
        return kAtom;
      },
      static_cast<const Node::variant&>(f.node()));
}

inline std::string format_literal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

inline void print_into(std::string& out, const Formula& f, bool parens) {
  if (parens) out += '(';
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        auto operand = [&out](const Formula& g, bool wrap) { print_into(out, g, wrap); };
        if constexpr (std::is_same_v<T, Var>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Const>) {
          out += format_literal(n.value);
        } else if constexpr (std::is_same_v<T, Not>) {
          out += '!';
          operand(n.arg, precedence(n.arg) < kNot);
        } else if constexpr (std::is_same_v<T, Implies>) {
          operand(n.lhs, precedence(n.lhs) <= kImplies);
          out += " -> ";
          operand(n.rhs, precedence(n.rhs) < kImplies);
        } else {
          constexpr int p = std::is_same_v<T, And> ? kAnd : kOr;
          operand(n.lhs, precedence(n.lhs) < p);
          out += std::is_same_v<T, And> ? " & " : " | ";
          operand(n.rhs, precedence(n.rhs) <= p);
        }
      },
      static_cast<const Node::variant&>(f.node()));
  if (parens) out += ')';
}

}  // namespace detail

/// Canonical rendering with the minimum parentheses needed to re-parse to
/// the same tree.
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_into(out, f, false);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

/// Truth-value semantics: classical (V_2), n-valued Łukasiewicz, or fuzzy
/// with a negation from the parametric family.
class Semantics {
 public:
  enum class Mode { Classical, NValued, Fuzzy };

  static Semantics classical() { return Semantics(Mode::Classical, 2, NegationFamily{}); }
  static Semantics nvalued(int n) { return Semantics(Mode::NValued, mvl::LogicValueSet{n}.n(), NegationFamily{}); }
  static Semantics fuzzy(NegationFamily neg) { return Semantics(Mode::Fuzzy, 0, neg); }

  Mode mode() const { return mode_; }
  /// Number of truth values; 2 for classical, 0 for fuzzy.
  int arity() const { return n_; }
  const NegationFamily& negation() const { return neg_; }

 private:
  Semantics(Mode mode, int n, NegationFamily neg) : mode_(mode), n_(n), neg_(neg) {}
  Mode mode_;
  int n_;
  NegationFamily neg_;
};

using Environment = std::map<std::string, TruthDegree, std::less<>>;

class UnboundVariable : public DomainError {
 public:
  explicit UnboundVariable(const std::string& name)
      : DomainError("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

namespace detail {

inline TruthDegree lookup(const Environment& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw UnboundVariable(name);
  return it->second;
}

inline mvl::MvlValue eval_mvl(const Formula& f, const Environment& env, int n) {
  return std::visit(
      [&](const auto& node) -> mvl::MvlValue {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Var>) {
          return mvl::MvlValue::from_degree(lookup(env, node.name), n);
        } else if constexpr (std::is_same_v<T, Const>) {
          return mvl::MvlValue::from_degree(TruthDegree{node.value}, n);
        } else if constexpr (std::is_same_v<T, Not>) {
          return mvl::mvl_not(eval_mvl(node.arg, env, n));
        } else if constexpr (std::is_same_v<T, And>) {
          return mvl::mvl_and(eval_mvl(node.lhs, env, n), eval_mvl(node.rhs, env, n));
        } else if constexpr (std::is_same_v<T, Or>) {
          return mvl::mvl_or(eval_mvl(node.lhs, env, n), eval_mvl(node.rhs, env, n));
        } else {
          return mvl::mvl_implies(eval_mvl(node.lhs, env, n), eval_mvl(node.rhs, env, n));
        }
      },
      static_cast<const Node::variant&>(f.node()));
}

inline TruthDegree eval_fuzzy(const Formula& f, const Environment& env, const NegationFamily& neg) {
  return std::visit(
      [&](const auto& node) -> TruthDegree {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Var>) {
          return lookup(env, node.name);
        } else if constexpr (std::is_same_v<T, Const>) {
          return TruthDegree{node.value};
        } else if constexpr (std::is_same_v<T, Not>) {
          return negate(neg, eval_fuzzy(node.arg, env, neg));
        } else if constexpr (std::is_same_v<T, And>) {
          return conj(eval_fuzzy(node.lhs, env, neg), eval_fuzzy(node.rhs, env, neg));
        } else if constexpr (std::is_same_v<T, Or>) {
          return disj(eval_fuzzy(node.lhs, env, neg), eval_fuzzy(node.rhs, env, neg));
        } else {
          // Kleene-Dienes: a -> b = max(neg(a), b)
          return disj(negate(neg, eval_fuzzy(node.lhs, env, neg)), eval_fuzzy(node.rhs, env, neg));
        }
      },
      static_cast<const Node::variant&>(f.node()));
}

}  // namespace detail

/// Truth degree of f under sem.  Under classical/n-valued semantics every
/// bound value must lie in V_n.
inline TruthDegree evaluate(const Formula& f, const Environment& env, const Semantics& sem) {
  if (sem.mode() == Semantics::Mode::Fuzzy) return detail::eval_fuzzy(f, env, sem.negation());
  const int n = sem.arity();
  for (const auto& [name, value] : env) {
    try {
      (void)mvl::MvlValue::from_degree(value, n);
    } catch (const DomainError&) {
      throw DomainError("variable '" + name + "' = " + std::to_string(value.value()) + " is not in V_" +
                        std::to_string(n));
    }
  }
  return detail::eval_mvl(f, env, n).degree();
}

/// Variable names occurring in f, sorted and unique.
inline std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  auto walk = [&out](const auto& self, const Formula& g) -> void {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Var>) {
            out.push_back(node.name);
          } else if constexpr (std::is_same_v<T, Not>) {
            self(self, node.arg);
          } else if constexpr (!std::is_same_v<T, Const>) {
            self(self, node.lhs);
            self(self, node.rhs);
          }
        },
        static_cast<const Node::variant&>(g.node()));
  };
  walk(walk, f);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graded::dsl
