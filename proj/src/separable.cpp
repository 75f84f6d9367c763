#include "frobdiff/separable.hpp"

#include <algorithm>

namespace frobdiff {

namespace kupoly {

void trim(KUPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

KUPoly add(const KUPoly& a, const KUPoly& b) {
  KUPoly r = a.size() >= b.size() ? a : b;
  const KUPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

KUPoly mul(const KUPoly& a, const KUPoly& b) {
  if (a.empty() || b.empty()) return {};
  KUPoly r(a.size() + b.size() - 1, a.front().zero_like());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

KUPoly scale(const KUPoly& a, const RatFunc& c) {
  KUPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

KUPoly mod(const KUPoly& a, const KUPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "reduction modulo zero polynomial");
  KUPoly r = a;
  trim(r);
  const RatFunc lead_inv = b.back().inverse();
  while (r.size() >= b.size()) {
    RatFunc factor = r.back() * lead_inv;
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - factor * b[i];
    r.pop_back();
    trim(r);
  }
  return r;
}

KUPoly derivative(const KUPoly& a) {
  KUPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i].scaled(i));
  trim(r);
  return r;
}

KUPoly inverse_mod(const KUPoly& a, const KUPoly& m) {
  // Extended Euclid tracking only the cofactor of a.
  KUPoly r0 = m, r1 = mod(a, m);
  KUPoly s0, s1;
  if (!r1.empty()) s1 = {r1.front().one_like()};
  while (r1.size() > 1) {
    KUPoly q;
    KUPoly r = r0;
    const RatFunc lead_inv = r1.back().inverse();
    q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, r1.front().zero_like());
    while (r.size() >= r1.size()) {
      RatFunc factor = r.back() * lead_inv;
      std::size_t shift = r.size() - r1.size();
      q[shift] = factor;
      for (std::size_t i = 0; i < r1.size(); ++i) r[i + shift] = r[i + shift] - factor * r1[i];
      r.pop_back();
      trim(r);
    }
    trim(q);
    KUPoly s = add(s0, scale(mul(q, s1), r1.front().one_like().scaled(r1.front().p() - 1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial not invertible modulo f");
  return mod(scale(s1, r1.front().inverse()), m);
}

KUPoly pow_mod(const KUPoly& a, std::uint64_t e, const KUPoly& m) {
  KUPoly result = {m.front().one_like()};
  result = mod(result, m);
  KUPoly base = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base), m);
    e >>= 1;
    if (e > 0) base = mod(mul(base, base), m);
  }
  return result;
}

}  // namespace kupoly

KUPoly evaluate_at_root(const SeparableExtension& ext, const KUPoly& f) {
  KUPoly r;
  KUPoly power = {ext.base.one()};
  KUPoly alpha = kupoly::mod({ext.base.zero(), ext.base.one()}, ext.minpoly);
  for (const auto& c : f) {
    r = kupoly::add(r, kupoly::scale(power, c));
    power = kupoly::mod(kupoly::mul(power, alpha), ext.minpoly);
  }
  return kupoly::mod(r, ext.minpoly);
}

SeparableExtension extend_separable(const FrobDerivation& d, KUPoly minpoly) {
  kupoly::trim(minpoly);
  if (minpoly.size() < 2) throw Error(ErrorCode::ConstantPolynomial, "minimal polynomial must have degree >= 1");
  minpoly = kupoly::scale(minpoly, minpoly.back().inverse());
  KUPoly fprime = kupoly::derivative(minpoly);
  if (fprime.empty()) throw Error(ErrorCode::NotSeparable, "f' = 0");
  KUPoly fprime_q;
  try {
    fprime_q = kupoly::inverse_mod(kupoly::pow_mod(fprime, d.q(), minpoly), minpoly);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DivisionByZero) throw Error(ErrorCode::NotSeparable, "gcd(f, f') != 1");
    throw;
  }
  KUPoly alpha_q = kupoly::pow_mod({d.zero(), d.one()}, d.q(), minpoly);
  // f^d(alpha^q) by Horner.
  KUPoly fd_at;
  for (std::size_t i = minpoly.size(); i-- > 0;) {
    fd_at = kupoly::mod(kupoly::mul(fd_at, alpha_q), minpoly);
    fd_at = kupoly::add(fd_at, KUPoly{d.derive(minpoly[i])});
  }
  KUPoly dalpha = kupoly::mod(kupoly::mul(fd_at, fprime_q), minpoly);
  dalpha = kupoly::scale(dalpha, d.one().scaled(d.p() - 1));
  return SeparableExtension{d, std::move(minpoly), std::move(dalpha)};
}

KUPoly derive_in_extension(const SeparableExtension& ext, const KUPoly& element) {
  const FrobDerivation& d = ext.base;
  const KUPoly& f = ext.minpoly;
  KUPoly alpha_q = kupoly::pow_mod({d.zero(), d.one()}, d.q(), f);
  KUPoly result;
  KUPoly a_prev = {d.one()};  // alpha^{q(i-1)}
  KUPoly a_cur = kupoly::mod({d.one()}, f);  // alpha^{qi}
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (i > 0) {
      a_prev = a_cur;
      a_cur = kupoly::mod(kupoly::mul(a_cur, alpha_q), f);
    }
    const RatFunc& c = element[i];
    if (c.is_zero()) continue;
    // d(c alpha^i) = c^q i alpha^{q(i-1)} d(alpha) + alpha^{qi} d(c)
    result = kupoly::add(result, kupoly::scale(a_cur, d.derive(c)));
    if (i % d.p() != 0) {
      RatFunc factor = c.frobenius(d.n()).scaled(i);
      result = kupoly::add(result, kupoly::scale(kupoly::mul(a_prev, ext.dalpha), factor));
    }
  }
  return kupoly::mod(result, f);
}

}  // namespace frobdiff
