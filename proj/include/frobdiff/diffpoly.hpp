#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frobdiff/derivation.hpp"
#include "frobdiff/sparse_poly.hpp"

namespace frobdiff {

/// Element of K{X}: variable i stands for the jet X^(i).
using DiffPoly = SparsePoly<RatFunc>;
/// Ordinary multivariate polynomial over K in Z_0, Z_1, ...
using KPoly = SparsePoly<RatFunc>;

/// X^(i) over the given field.
DiffPoly jet_variable(const FieldSpec& field, std::size_t i);

/// The Fr^n-derivation of K{X} extending d with X^(i) -> X^(i+1).
DiffPoly delta(const FrobDerivation& d, const DiffPoly& f);
DiffPoly delta_iter(const FrobDerivation& d, const DiffPoly& f, unsigned k);

/// Largest jet index present, -1 for nonzero constants; ZeroPolynomial on 0.
int order(const DiffPoly& f);
/// Degree of f in its leader X^(order f).
std::uint32_t leader_degree(const DiffPoly& f);

/// d f / d X^(m) with m = order(f).
DiffPoly separant(const DiffPoly& f);

/// f^d: the derivation applied to every coefficient.
KPoly coeff_derive(const FrobDerivation& d, const KPoly& f);

/// (a, d a, ..., d^{count-1} a).
template <DifferentialField F>
std::vector<typename F::Element> jets(const F& field, const typename F::Element& a, std::size_t count) {
  std::vector<typename F::Element> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(a);
  while (out.size() < count) out.push_back(field.derive(out.back()));
  return out;
}

/// Substitutes X^(i) -> jet_values[i]. Throws InsufficientJets when fewer
/// than order(f) + 1 values are supplied.
template <DifferentialField F>
typename F::Element evaluate(const F& field, const DiffPoly& f, std::span<const typename F::Element> jet_values) {
  using E = typename F::Element;
  if (f.max_variable() >= static_cast<int>(jet_values.size())) {
    throw Error(ErrorCode::InsufficientJets, "evaluation needs jets up to order " + std::to_string(f.max_variable()));
  }
  return substitute<RatFunc, E>(f, jet_values, field.one(), [&field](const RatFunc& c) { return field.embed(c); });
}

/// Evaluation at a, computing the jets of a with the field's derivation.
template <DifferentialField F>
typename F::Element evaluate_at(const F& field, const DiffPoly& f, const typename F::Element& a) {
  auto js = jets(field, a, static_cast<std::size_t>(f.max_variable() + 1));
  return evaluate(field, f, std::span<const typename F::Element>(js));
}

/// Ordinary polynomial over K evaluated at a point of the field.
template <DifferentialField F>
typename F::Element evaluate_kpoly(const F& field, const KPoly& f, std::span<const typename F::Element> point) {
  using E = typename F::Element;
  return substitute<RatFunc, E>(f, point, field.one(), [&field](const RatFunc& c) { return field.embed(c); });
}

/// Returns (d(f(a)), f^d(a^q) + sum_j (df/dZ_j)(a)^q d(a_j)); the chain rule
/// for Fr^n-derivations says these agree.
template <DifferentialField F>
std::pair<typename F::Element, typename F::Element> total_derivative_check(
    const F& field, const FrobDerivation& base, const KPoly& f, std::span<const typename F::Element> point) {
  using E = typename F::Element;
  E lhs = field.derive(evaluate_kpoly(field, f, point));
  std::vector<E> point_q;
  for (const auto& a : point) point_q.push_back(a.frobenius(field.n()));
  E rhs = evaluate_kpoly(field, coeff_derive(base, f), std::span<const E>(point_q));
  for (std::size_t j = 0; j < point.size(); ++j) {
    KPoly df = f.partial(j);
    if (df.is_zero()) continue;
    rhs = rhs + evaluate_kpoly(field, df, point).frobenius(field.n()) * field.derive(point[j]);
  }
  return {lhs, rhs};
}

/// Name of a jet: x, x', x'', then x^(k).
std::string jet_name(std::size_t i, const std::string& base = "x");

/// Canonical text of a polynomial over K; `var_name` names variable i.
std::string to_string(const SparsePoly<RatFunc>& f, const FieldSpec& field,
                      const std::function<std::string(std::size_t)>& var_name);
/// Canonical text of a differential polynomial in x.
std::string to_string(const DiffPoly& f, const FieldSpec& field);

}  // namespace frobdiff
