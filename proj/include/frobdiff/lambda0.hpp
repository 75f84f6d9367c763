#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobdiff/diffpoly.hpp"

namespace frobdiff {

/// Terms over x, d and lambda0.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Jet, Const, Add, Sub, Mul, Neg, Pow, Derive, Lambda0 };
  Kind kind;
  std::size_t jet = 0;           // Jet: x^(jet)
  RatFunc value;                 // Const
  std::uint64_t exponent = 0;    // Pow
  std::vector<TermPtr> args;

  static TermPtr make_jet(std::size_t i);
  static TermPtr make_const(RatFunc c);
  static TermPtr make(Kind kind, std::vector<TermPtr> args);
  static TermPtr make_pow(TermPtr base, std::uint64_t e);
};

/// `lhs = rhs` or `lhs != rhs`.
struct Atom {
  TermPtr lhs;
  TermPtr rhs;
  bool equal = true;
};

/// And/or combination of atoms.
struct Lambda0Formula {
  enum class Kind { Atom, And, Or };
  Kind kind = Kind::Atom;
  frobdiff::Atom atom;
  std::vector<Lambda0Formula> children;

  static Lambda0Formula make_atom(TermPtr lhs, TermPtr rhs, bool equal);
  static Lambda0Formula make_and(std::vector<Lambda0Formula> parts);
  static Lambda0Formula make_or(std::vector<Lambda0Formula> parts);
};

/// `poly = 0` or `poly != 0`.
struct PolyAtom {
  DiffPoly poly;
  bool equal = true;
  friend bool operator==(const PolyAtom&, const PolyAtom&) = default;
};

/// Conjunction of differential polynomial conditions.
struct Branch {
  std::vector<PolyAtom> atoms;
};

/// Converts a lambda0-free term to a differential polynomial.
DiffPoly term_to_diffpoly(const FrobDerivation& d, const Term& t);

/// Eliminates lambda0 by a case split on each occurrence lambda0(b): a root
/// branch adding d(b) = 0 and raising affected atoms to the p-th power, and
/// a zero branch adding d(b) != 0 with lambda0(b) replaced by 0. Branches
/// containing a false constant atom are dropped. Over strict fields the
/// disjunction of the result is equivalent to the formula.
///
/// Throws UnsupportedNesting when a lambda0 argument contains lambda0 or a
/// lambda0 occurs under d.
std::vector<Branch> lambda0_rewrite(const FrobDerivation& d, const Lambda0Formula& phi);

/// Pointwise truth of the formula at a, with lambda0 taken literally.
bool evaluate_formula(const FrobDerivation& d, const Lambda0Formula& phi, const RatFunc& a);
/// Pointwise truth of the disjunction of the branches at a.
bool evaluate_branches(const FrobDerivation& d, const std::vector<Branch>& branches, const RatFunc& a);

std::string to_string(const Branch& b, const FieldSpec& field);

}  // namespace frobdiff
