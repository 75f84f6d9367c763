#include "frobdiff/derivation.hpp"

namespace frobdiff {

FrobDerivation::FrobDerivation(FieldSpec field, unsigned n, std::vector<RatFunc> images)
    : field_(std::move(field)), n_(n), images_(std::move(images)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidField, "twist order n must be positive");
  if (images_.size() != field_.nvars()) {
    throw Error(ErrorCode::InvalidField, "need one derivation image per generator");
  }
  for (const auto& img : images_) {
    if (img.p() != field_.p || img.nvars() != field_.nvars()) {
      throw Error(ErrorCode::FieldMismatch, "derivation image outside the field");
    }
  }
  (void)q();
}

FrobDerivation FrobDerivation::from_named(FieldSpec field, unsigned n,
                                          const std::map<std::string, RatFunc>& images) {
  std::vector<RatFunc> table(field.nvars(), RatFunc::zero(field));
  for (const auto& [name, value] : images) {
    auto idx = field.index_of(name);
    if (!idx) throw Error(ErrorCode::UnknownName, "no generator named " + name);
    table[*idx] = value;
  }
  return FrobDerivation(std::move(field), n, std::move(table));
}

std::uint64_t FrobDerivation::q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n_; ++i) {
    if (r > (1ull << 31) / field_.p) throw Error(ErrorCode::InvalidField, "p^n too large");
    r *= field_.p;
  }
  return r;
}

// With img_i the image of t_i, the derivation is a -> sum_i img_i (da/dt_i)^q:
// the right side is additive, takes t_i to img_i and satisfies the twisted
// Leibniz rule, so it is the unique extension.
RatFunc FrobDerivation::derive(const RatFunc& a) const {
  if (a.p() != field_.p || a.nvars() != field_.nvars()) {
    throw Error(ErrorCode::FieldMismatch, "element outside the derivation's field");
  }
  RatFunc result = zero();
  if (a.is_constant()) return result;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero()) continue;
    if (!a.num().involves(i) && !a.den().involves(i)) continue;
    RatFunc da = a.partial(i);
    if (da.is_zero()) continue;
    result += images_[i] * da.frobenius(n_);
  }
  return result;
}

RatFunc FrobDerivation::derive_iter(const RatFunc& a, unsigned k) const {
  RatFunc r = a;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = derive(r);
  return r;
}

ComposedOperator::ComposedOperator(FrobDerivation outer, FrobDerivation inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {}

ComposedOperator compose(const FrobDerivation& outer, const FrobDerivation& inner) {
  if (!(outer.field() == inner.field())) {
    throw Error(ErrorCode::FieldMismatch, "composed derivations act on different fields");
  }
  return ComposedOperator(outer, inner);
}

StrictnessVerdict strictness_witness(const FrobDerivation& d, const RatFunc& a) {
  if (d.is_constant(a) && !a.pth_root()) return StrictnessVerdict::NonStrictWitness;
  return StrictnessVerdict::ConsistentWithStrict;
}

std::string to_string(StrictnessVerdict v) {
  return v == StrictnessVerdict::NonStrictWitness ? "non-strict-witness" : "consistent-with-strict";
}

}  // namespace frobdiff
