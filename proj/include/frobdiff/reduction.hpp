#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobdiff/diffpoly.hpp"
#include "frobdiff/search.hpp"

namespace frobdiff {

/// sum_i t^{i-1} f_i^{p^N}. Vanishes exactly where all f_i do, because
/// 1, t, ..., t^{m-1} stay independent over p-th powers when t is not one.
/// Throws BadTwist if t is a p-th power, BadExponent if m >= p^N.
DiffPoly combine_system(const std::vector<DiffPoly>& fs, const RatFunc& t, unsigned big_n);

struct CoprimeSplit {
  DiffPoly reduced;  // f / common
  DiffPoly common;   // gcd of f and g in the leader, free of content
};

/// Removes from f its gcd with g, both viewed as polynomials in X^(m)
/// over K(X, ..., X^(m-1)). Throws LeaderMismatch unless order(f) = m and
/// order(g) <= m.
CoprimeSplit coprime_reduce(const FieldSpec& field, const DiffPoly& f, const DiffPoly& g, int m);

struct EliminationResult {
  DiffPoly p;
  DiffPoly q;
  DiffPoly gtilde;  // p f + q g, of order below order(f)
  // Denominator lcms cleared from f and g before elimination.
  RatFunc f_multiplier;
  RatFunc g_multiplier;
};

/// Extended Euclid in the leader of f with denominators cleared, so that
/// p f + q g = gtilde holds in K{X}. Throws NotCoprime, LeaderMismatch.
EliminationResult gcd_eliminate(const FieldSpec& field, const DiffPoly& f, const DiffPoly& g);

struct PipelineReport {
  DiffPoly reduced_f;
  std::vector<DiffPoly> removed_factors;
  EliminationResult elimination;
  std::string note;
};

/// Strips common factors with g from f, then eliminates the leader.
PipelineReport pipeline_reduce(const FieldSpec& field, const DiffPoly& f, const DiffPoly& g);

/// First a in enumeration order with f(a) = 0 and g(a) != 0. Throws
/// ShapeViolation unless order(f) = m >= 0, the separant of f is nonzero,
/// g != 0 and order(g) < m.
std::optional<RatFunc> wood_solve(const FrobDerivation& d, const DiffPoly& f, const DiffPoly& g,
                                  const SearchConfig& config = {});

}  // namespace frobdiff
