#pragma once

#include <span>
#include <string>
#include <vector>

#include "frobdiff/diffpoly.hpp"

namespace frobdiff {

/// Generators of an ideal of K[X_1, ..., X_m]; variable i of each KPoly is
/// X_{i+1}.
struct IdealGens {
  std::vector<std::string> vars;
  std::vector<KPoly> gens;

  /// Throws ShapeViolation on an empty generator list or a generator
  /// involving a variable beyond vars.
  static IdealGens make(std::vector<std::string> vars, std::vector<KPoly> gens);
  std::size_t nvars() const { return vars.size(); }
};

/// The ideal (I, d(I)) in X_1..X_m, X'_1..X'_m; X'_i is variable m + i - 1.
struct ProlongedIdeal {
  IdealGens ideal;
  std::size_t base_vars = 0;
};

/// f^d(X^q) + sum_i (df/dX_i)(X)^q X'_i, in 2m variables.
KPoly twist_derive_poly(const FrobDerivation& d, const KPoly& f, std::size_t m);

/// The usual tangent bundle linear part sum_i (df/dX_i) X'_i: what the
/// twisted formula degenerates to for the zero map with q read as 1.
KPoly classical_tangent_poly(const KPoly& f, std::size_t m);

ProlongedIdeal prolong(const IdealGens& v, const FrobDerivation& d);

/// Does every generator of W (in X, X') vanish at (a, jets)? `jets` holds
/// d(a_i); InsufficientJets unless both spans cover the m base variables.
template <DifferentialField F>
bool check_section(const F& field, const IdealGens& w, std::span<const typename F::Element> point,
                   std::span<const typename F::Element> jets) {
  using E = typename F::Element;
  const std::size_t m = w.nvars() / 2;
  if (point.size() < m || jets.size() < m) {
    throw Error(ErrorCode::InsufficientJets, "section check needs a point and first jets for every variable");
  }
  std::vector<E> values(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(m));
  values.insert(values.end(), jets.begin(), jets.begin() + static_cast<std::ptrdiff_t>(m));
  for (const auto& g : w.gens) {
    if (!evaluate_kpoly(field, g, std::span<const E>(values)).is_zero()) return false;
  }
  return true;
}

/// As above with the jets computed by the field's derivation.
template <DifferentialField F>
bool check_section(const F& field, const IdealGens& w, std::span<const typename F::Element> point) {
  using E = typename F::Element;
  std::vector<E> jets;
  for (const auto& a : point) jets.push_back(field.derive(a));
  return check_section(field, w, point, std::span<const E>(jets));
}

/// Printable names of the prolonged variables: X..., then X'....
std::vector<std::string> prolonged_names(const std::vector<std::string>& vars);

std::string to_string(const IdealGens& ideal, const FieldSpec& field);

}  // namespace frobdiff
