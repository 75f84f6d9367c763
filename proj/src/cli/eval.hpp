#pragma once

#include <set>
#include <string>
#include <vector>

#include "frobdiff/cli.hpp"
#include "frobdiff/diffpoly.hpp"
#include "frobdiff/lambda0.hpp"

namespace frobdiff::cli {

/// Interprets surface trees in the rings the commands need. Names resolve
/// to ring variables first, then generators, then session bindings.
class Evaluator {
 public:
  explicit Evaluator(const Session& s) : s_(s) {}

  /// Element of K. d(.) needs the session derivation.
  RatFunc field(const Expr& e) const;
  /// Element of K{x}.
  DiffPoly diffpoly(const Expr& e) const;
  /// Element of the session tower L.
  TowerElem tower(const Expr& e) const;
  /// Polynomial over K in the named variables (names may carry primes).
  KPoly kpoly(const Expr& e, const std::vector<std::string>& vars) const;
  /// Term for lambda0 formulas, with jet-free subterms folded to constants.
  TermPtr term(const Expr& e) const;
  Lambda0Formula formula(const Formula& f) const;

  /// Polynomial in F_p[t]; ShapeViolation for proper fractions.
  Poly polynomial(const Expr& e) const;

 private:
  template <class Mode>
  typename Mode::Value eval(const Expr& e, const Mode& m) const;
  template <class Mode>
  typename Mode::Value name(const Expr& e, const Mode& m) const;

  const Session& s_;
  mutable std::set<std::string> active_;
};

}  // namespace frobdiff::cli
