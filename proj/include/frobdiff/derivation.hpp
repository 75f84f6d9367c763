#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobdiff/ratfunc.hpp"

namespace frobdiff {

/// A field with an Fr^n-derivation whose elements support ring arithmetic.
/// Models: FrobDerivation (elements of F_p(t)) and TowerDerivation.
template <class F>
concept DifferentialField = requires(const F& field, const typename F::Element& a, const RatFunc& c) {
  { field.derive(a) } -> std::same_as<typename F::Element>;
  { field.embed(c) } -> std::same_as<typename F::Element>;
  { field.zero() } -> std::same_as<typename F::Element>;
  { field.one() } -> std::same_as<typename F::Element>;
  { field.n() } -> std::convertible_to<unsigned>;
  { field.p() } -> std::convertible_to<std::uint32_t>;
  { a + a } -> std::same_as<typename F::Element>;
  { a - a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a.frobenius(1u) } -> std::same_as<typename F::Element>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// An Fr^n-derivation on F_p(t_1, ..., t_k), determined by the images of
/// the generators. Every assignment of images is admissible.
class FrobDerivation {
 public:
  using Element = RatFunc;

  FrobDerivation(FieldSpec field, unsigned n, std::vector<RatFunc> images);
  /// Images by generator name; generators not mentioned map to 0.
  static FrobDerivation from_named(FieldSpec field, unsigned n, const std::map<std::string, RatFunc>& images);

  const FieldSpec& field() const { return field_; }
  unsigned n() const { return n_; }
  std::uint32_t p() const { return field_.p; }
  /// q = p^n.
  std::uint64_t q() const;
  const std::vector<RatFunc>& images() const { return images_; }

  RatFunc derive(const RatFunc& a) const;
  /// k-fold iterate of derive.
  RatFunc derive_iter(const RatFunc& a, unsigned k) const;
  bool is_constant(const RatFunc& a) const { return derive(a).is_zero(); }

  RatFunc embed(const RatFunc& c) const { return c; }
  RatFunc zero() const { return RatFunc::zero(field_); }
  RatFunc one() const { return RatFunc::one(field_); }
  RatFunc generator(std::size_t i) const { return RatFunc::generator(field_, i); }

 private:
  FieldSpec field_;
  unsigned n_;
  std::vector<RatFunc> images_;
};

/// The map a -> outer(inner(a)); an Fr^{m+n}-derivation.
class ComposedOperator {
 public:
  ComposedOperator(FrobDerivation outer, FrobDerivation inner);

  RatFunc operator()(const RatFunc& a) const { return outer_.derive(inner_.derive(a)); }
  unsigned twist() const { return outer_.n() + inner_.n(); }
  const FieldSpec& field() const { return outer_.field(); }

 private:
  FrobDerivation outer_;
  FrobDerivation inner_;
};

/// Throws FieldMismatch unless both derivations live on the same field.
ComposedOperator compose(const FrobDerivation& outer, const FrobDerivation& inner);

/// Checks op(ab) = a^{p^twist} op(b) + b^{p^twist} op(a) exactly.
template <class Op>
bool satisfies_twisted_leibniz(const Op& op, unsigned twist, const RatFunc& a, const RatFunc& b) {
  return op(a * b) == a.frobenius(twist) * op(b) + b.frobenius(twist) * op(a);
}

enum class StrictnessVerdict { NonStrictWitness, ConsistentWithStrict };

/// A constant that is not a p-th power witnesses non-strictness.
StrictnessVerdict strictness_witness(const FrobDerivation& d, const RatFunc& a);

std::string to_string(StrictnessVerdict v);

}  // namespace frobdiff
