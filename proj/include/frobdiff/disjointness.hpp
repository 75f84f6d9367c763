#pragma once

#include <functional>
#include <span>
#include <vector>

#include "frobdiff/tower.hpp"

namespace frobdiff {

/// The subfield F = F_p(t_1^{e_1}, ..., t_k^{e_k}) of K, each e_i a power of
/// p. K is free over F on the monomials t^r with 0 <= r_i < e_i.
struct SubfieldSpec {
  std::vector<std::uint64_t> exponents;

  static SubfieldSpec whole(const FieldSpec& k) { return {std::vector<std::uint64_t>(k.nvars(), 1)}; }
  static SubfieldSpec pth_powers(const FieldSpec& k) { return {std::vector<std::uint64_t>(k.nvars(), k.p)}; }
};

struct LinearRelation {
  bool dependent = false;
  /// Coefficients c_i with sum c_i x_i = 0, present when dependent.
  std::vector<RatFunc> witness;
};

struct DisjointnessReport {
  LinearRelation over_base;
  LinearRelation over_subfield;
  bool all_constants = false;
};

/// Coordinates of c in K over F, one per basis monomial (lexicographic in
/// r). Throws BadBasis if an exponent is not a power of p or the expansion
/// fails to reproduce c.
std::vector<RatFunc> subfield_coordinates(const RatFunc& c, const SubfieldSpec& sub);

/// Coordinates of x in L over K (tower basis order).
std::vector<RatFunc> base_coordinates(const TowerElem& x);

/// Relation spaces of x_1..x_r over K and over F, computed by exact
/// nullspaces of the coordinate matrices.
DisjointnessReport linear_disjointness_check(const TowerDerivation& d, std::span<const TowerElem> elements,
                                             const SubfieldSpec& sub);

/// Variant for operators other than Fr^n-derivations: the caller supplies
/// the constant test.
DisjointnessReport linear_disjointness_check(const Tower& tower, std::span<const TowerElem> elements,
                                             const SubfieldSpec& sub,
                                             const std::function<bool(const TowerElem&)>& is_constant);

}  // namespace frobdiff
