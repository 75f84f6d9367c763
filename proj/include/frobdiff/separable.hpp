#pragma once

#include <vector>

#include "frobdiff/derivation.hpp"

namespace frobdiff {

/// Dense univariate polynomial over K, lowest degree first, no trailing zeros.
using KUPoly = std::vector<RatFunc>;

/// K(alpha) = K[Z]/(f) for a separable f, carrying the unique extension of
/// an Fr^n-derivation. Elements are KUPoly of degree < deg f.
struct SeparableExtension {
  FrobDerivation base;
  KUPoly minpoly;  // monic
  KUPoly dalpha;   // image of alpha, reduced mod minpoly
};

/// d(alpha) = -f^d(alpha^q) / f'(alpha)^q mod f. Throws NotSeparable when
/// f' = 0 or gcd(f, f') != 1, ConstantPolynomial when deg f < 1.
SeparableExtension extend_separable(const FrobDerivation& d, KUPoly minpoly);

/// Derivation on K(alpha) via the twisted Leibniz rule, reduced mod f.
KUPoly derive_in_extension(const SeparableExtension& ext, const KUPoly& element);

/// f(alpha) for f with coefficients in K, reduced mod the minimal polynomial.
KUPoly evaluate_at_root(const SeparableExtension& ext, const KUPoly& f);

namespace kupoly {

void trim(KUPoly& f);
KUPoly add(const KUPoly& a, const KUPoly& b);
KUPoly mul(const KUPoly& a, const KUPoly& b);
KUPoly scale(const KUPoly& a, const RatFunc& c);
/// Remainder of a modulo b (b nonzero).
KUPoly mod(const KUPoly& a, const KUPoly& b);
KUPoly derivative(const KUPoly& a);
/// Inverse of a modulo m; throws DivisionByZero when not coprime.
KUPoly inverse_mod(const KUPoly& a, const KUPoly& m);
KUPoly pow_mod(const KUPoly& a, std::uint64_t e, const KUPoly& m);

}  // namespace kupoly

}  // namespace frobdiff
