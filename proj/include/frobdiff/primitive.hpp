#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frobdiff/diffpoly.hpp"
#include "frobdiff/search.hpp"
#include "frobdiff/tower.hpp"

namespace frobdiff {

/// G in K[X_0..X_t, Y_0..Y_s]; X_k is variable k and Y_k is t + 1 + k.
struct AnnihilatorPoly {
  KPoly g;
  std::size_t t = 0;
  std::size_t s = 0;

  std::size_t x_var(std::size_t k) const { return k; }
  std::size_t y_var(std::size_t k) const { return t + 1 + k; }
  /// Throws ZeroPolynomial for G = 0, ShapeViolation if G uses variables
  /// beyond Y_s.
  static AnnihilatorPoly make(KPoly g, std::size_t t, std::size_t s) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the annihilator must be nonzero");
    if (g.max_variable() > static_cast<int>(t + 1 + s)) {
      throw Error(ErrorCode::ShapeViolation, "annihilator uses variables beyond Y_s");
    }
    return AnnihilatorPoly{std::move(g), t, s};
  }
};

inline const FieldSpec& base_field_of(const FrobDerivation& d) { return d.field(); }
inline const FieldSpec& base_field_of(const TowerDerivation& d) { return d.base().field(); }

template <DifferentialField F>
struct UVContext {
  const F& field;
  typename F::Element u;
  typename F::Element v;
};

/// Polynomials in the formal jets Lambda^(j) (variable j) over the field.
template <DifferentialField F>
using LambdaPoly = SparsePoly<typename F::Element>;

/// (u + Lambda v)^(k) = u^(k) + Lambda^(k) v^{q^k} + Lambda^{q^k} v^(k) for
/// k >= 1, and u + Lambda v for k = 0.
template <DifferentialField F>
LambdaPoly<F> twisted_jet_expand(std::size_t k, const UVContext<F>& ctx) {
  using P = LambdaPoly<F>;
  const auto& fd = ctx.field;
  const auto one = fd.one();
  if (k == 0) return P::constant(ctx.u) + P::variable(0, ctx.v);
  std::uint64_t qk = 1;
  for (std::size_t i = 0; i < k * fd.n(); ++i) qk *= fd.p();
  auto uk = ctx.u;
  auto vk = ctx.v;
  for (std::size_t i = 0; i < k; ++i) {
    uk = fd.derive(uk);
    vk = fd.derive(vk);
  }
  auto vq = ctx.v.frobenius(static_cast<unsigned>(k * fd.n()));
  P out = P::constant(uk) + P::variable(k, vq);
  out += P::variable(0, one, static_cast<std::uint32_t>(qk)).times(vk);
  return out;
}

/// Values of Lambda^(j) at a concrete lambda, j = 0..count-1.
template <DifferentialField F>
std::vector<typename F::Element> lambda_jets(const F& field, const RatFunc& lambda, std::size_t count) {
  return jets(field, field.embed(lambda), count);
}

/// Evaluates a Lambda-jet polynomial at Lambda = lambda.
template <DifferentialField F>
typename F::Element evaluate_lambda(const F& field, const LambdaPoly<F>& f, const RatFunc& lambda) {
  using E = typename F::Element;
  auto js = lambda_jets(field, lambda, static_cast<std::size_t>(f.max_variable() + 1));
  return substitute<E, E>(f, std::span<const E>(js), field.one(), [](const E& c) { return c; });
}

namespace detail {

template <DifferentialField F>
LambdaPoly<F> substitute_formal(const AnnihilatorPoly& g, const KPoly& h, const UVContext<F>& ctx) {
  using P = LambdaPoly<F>;
  std::vector<P> values;
  for (std::size_t k = 0; k <= g.t; ++k) values.push_back(P::variable(k, ctx.field.one()));
  for (std::size_t k = 0; k <= g.s; ++k) values.push_back(twisted_jet_expand(k, ctx));
  const P one = P::constant(ctx.field.one());
  return substitute<RatFunc, P>(h, std::span<const P>(values), one,
                                [&](const RatFunc& c) { return P::constant(ctx.field.embed(c)); });
}

template <DifferentialField F>
void require_annihilates(const AnnihilatorPoly& g, const UVContext<F>& ctx) {
  if (!substitute_formal(g, g.g, ctx).is_zero()) {
    throw Error(ErrorCode::NotAnnihilator, "G does not vanish at the Lambda-tuple");
  }
}

template <DifferentialField F>
std::vector<typename F::Element> concrete_tuple(const AnnihilatorPoly& g, const UVContext<F>& ctx,
                                                const RatFunc& lambda) {
  const auto& fd = ctx.field;
  auto out = lambda_jets(fd, lambda, g.t + 1);
  auto w = jets(fd, ctx.u + fd.embed(lambda) * ctx.v, g.s + 1);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace detail

/// Formal value of dG/dX_i + dG/dY_i * v^{q^i} at the Lambda-tuple, paired
/// with the expected value 0. Throws NotAnnihilator when G does not vanish
/// there.
template <DifferentialField F>
std::pair<LambdaPoly<F>, LambdaPoly<F>> partial_identity_check(const AnnihilatorPoly& g, std::size_t i,
                                                              const UVContext<F>& ctx) {
  detail::require_annihilates(g, ctx);
  LambdaPoly<F> lhs;
  if (i <= g.t) lhs += detail::substitute_formal(g, g.g.partial(g.x_var(i)), ctx);
  if (i <= g.s) {
    auto vq = ctx.v.frobenius(static_cast<unsigned>(i * ctx.field.n()));
    lhs += detail::substitute_formal(g, g.g.partial(g.y_var(i)), ctx).times(vq);
  }
  return {lhs, LambdaPoly<F>()};
}

/// -(dG/dX_i)/(dG/dY_i) at the tuple with Lambda = lambda, which equals
/// v^{q^i}. Throws SeparantVanishes when the denominator is 0 there.
template <DifferentialField F>
typename F::Element recover_power(const AnnihilatorPoly& g, std::size_t i, const RatFunc& lambda,
                                  const UVContext<F>& ctx) {
  using E = typename F::Element;
  detail::require_annihilates(g, ctx);
  auto tuple = detail::concrete_tuple(g, ctx, lambda);
  std::span<const E> view(tuple);
  E den = i <= g.s ? evaluate_kpoly(ctx.field, g.g.partial(g.y_var(i)), view) : ctx.field.zero();
  if (den.is_zero()) throw Error(ErrorCode::SeparantVanishes, "dG/dY_i vanishes at the chosen lambda");
  E num = i <= g.t ? evaluate_kpoly(ctx.field, g.g.partial(g.x_var(i)), view) : ctx.field.zero();
  return (ctx.field.zero() - num) * den.inverse();
}

struct LambdaChoice {
  RatFunc lambda;
  std::size_t index;  // i with dG/dY_i nonzero at lambda
};

/// First lambda in enumeration order at which some dG/dY_i does not vanish.
template <DifferentialField F>
std::optional<LambdaChoice> find_lambda(const AnnihilatorPoly& g, const UVContext<F>& ctx,
                                        const SearchConfig& config = {}) {
  using E = typename F::Element;
  std::vector<std::pair<std::size_t, KPoly>> partials;
  for (std::size_t i = 0; i <= g.s; ++i) {
    KPoly d = g.g.partial(g.y_var(i));
    if (!d.is_zero()) partials.emplace_back(i, std::move(d));
  }
  if (partials.empty()) return std::nullopt;
  std::size_t found = 0;
  auto lambda = search_first(base_field_of(ctx.field), config, [&](const RatFunc& l) {
                               auto tuple = detail::concrete_tuple(g, ctx, l);
                               for (const auto& [i, d] : partials) {
                                 if (!evaluate_kpoly(ctx.field, d, std::span<const E>(tuple)).is_zero()) {
                                   found = i;
                                   return true;
                                 }
                               }
                               return false;
                             });
  if (!lambda) return std::nullopt;
  return LambdaChoice{*lambda, found};
}

}  // namespace frobdiff
