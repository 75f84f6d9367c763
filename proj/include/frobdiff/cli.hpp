#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "frobdiff/boperator.hpp"
#include "frobdiff/derivation.hpp"
#include "frobdiff/tower.hpp"

namespace frobdiff::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Surface syntax tree. Name nodes may carry primes (X' in prolonged
/// ideals); Jet nodes are x, x', x'' or x^(k).
struct Expr {
  enum class Kind { Num, Name, Jet, Add, Sub, Mul, Div, Pow, Derive, Lambda0 };
  Kind kind = Kind::Num;
  std::uint64_t value = 0;  // Num literal, Jet order, Pow exponent
  std::string name;
  unsigned primes = 0;
  std::vector<ExprPtr> args;

  static ExprPtr num(std::uint64_t v);
  static ExprPtr var(std::string name, unsigned primes = 0);
  static ExprPtr jet(std::uint64_t order);
  static ExprPtr binary(Kind kind, ExprPtr a, ExprPtr b);
  static ExprPtr unary(Kind kind, ExprPtr a);
  static ExprPtr pow(ExprPtr base, std::uint64_t e);
};

bool same_tree(const Expr& a, const Expr& b);
bool contains(const Expr& e, Expr::Kind kind);

/// Comparisons joined by & and |, & binding tighter.
struct Formula {
  enum class Kind { Compare, And, Or };
  Kind kind = Kind::Compare;
  ExprPtr lhs;
  ExprPtr rhs;
  bool equal = true;
  std::vector<Formula> children;
};

bool same_tree(const Formula& a, const Formula& b);

/// Throw SyntaxError with the byte offset of the first unexpected input.
ExprPtr parse_expr(std::string_view text);
Formula parse_formula(std::string_view text);

/// Minimal parenthesization: parse(print(e)) reproduces e.
std::string print(const Expr& e);
std::string print(const Formula& f);

/// Field, optional tower, named bindings and optional B-operator.
struct Session {
  FieldSpec field;
  std::optional<FrobDerivation> d;
  std::shared_ptr<const Tower> tower;
  std::optional<TowerDerivation> tower_d;
  std::map<std::string, ExprPtr> bindings;
  std::optional<AlgebraB> algebra;
  std::optional<BOperator> bop;
  // raw algebra verdict, kept so bop-validate can report a rejected table
  std::optional<AlgebraVerdict> algebra_verdict;
};

/// F_p(t) with d(t) = 1.
Session default_session(std::uint32_t p, unsigned n);

/// Line-oriented `key = value` text with [field], [tower], [bind] and
/// [algebra] sections. Syntax errors report offsets into `text`.
Session parse_session(std::string_view text, std::optional<unsigned> n_override = std::nullopt);

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 domain error, 2 syntax or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobdiff::cli
