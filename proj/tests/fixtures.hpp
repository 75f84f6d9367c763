#pragma once

// Shared desk fixtures.

#include <memory>

#include "frobdiff/derivation.hpp"
#include "frobdiff/tower.hpp"

namespace frobdiff::check {

/// F_2(t) with d(t) = 1 and n = 1.
inline FrobDerivation f2_standard() {
  auto k = FieldSpec::make(2, {"t"});
  return FrobDerivation(k, 1, {RatFunc::one(k)});
}

/// F_2(s, t) with d(s) = 0, d(t) = 1.
inline FrobDerivation f2_st() {
  auto k = FieldSpec::make(2, {"s", "t"});
  return FrobDerivation(k, 1, {RatFunc::zero(k), RatFunc::one(k)});
}

/// K = F_2(X, Y, lam, mu), L = K(x, y) with x^2 = X, y^2 = Y,
/// d(lam) = Y, d(mu) = X, everything else constant.
struct ExampleTower {
  FieldSpec base;
  std::shared_ptr<const Tower> tower;
  FrobDerivation base_d;
  TowerDerivation d;

  static ExampleTower make() {
    auto k = FieldSpec::make(2, {"X", "Y", "lam", "mu"});
    auto gen = [&](std::size_t i) { return RatFunc::generator(k, i); };
    FrobDerivation bd(k, 1, {RatFunc::zero(k), RatFunc::zero(k), gen(1), gen(0)});
    auto tw = Tower::make(k, {{"x", 1, gen(0)}, {"y", 1, gen(1)}});
    TowerDerivation td(tw, bd, {TowerElem(tw), TowerElem(tw)});
    return ExampleTower{k, tw, bd, td};
  }

  TowerElem lam() const { return d.embed(RatFunc::generator(base, 2)); }
  TowerElem mu() const { return d.embed(RatFunc::generator(base, 3)); }
  TowerElem x() const { return d.generator(0); }
  TowerElem y() const { return d.generator(1); }
};

}  // namespace frobdiff::check
