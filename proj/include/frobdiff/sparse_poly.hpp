#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "frobdiff/poly.hpp"

namespace frobdiff {

/// Graded order on exponent vectors of any length (missing entries are 0),
/// highest-index variable most significant. Used as "greater", so maps start
/// at the leading term.
struct HighVarGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da > db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
      std::uint32_t x = i < a.size() ? a[i] : 0;
      std::uint32_t y = i < b.size() ? b[i] : 0;
      if (x != y) return x > y;
    }
    return false;
  }
};

inline void trim_exponents(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

/// Sparse polynomial in variables v_0, v_1, ... over a coefficient field C.
/// Exponent vectors carry no trailing zeros, so the number of variables is
/// open-ended. C must provide is_zero, +, -, *, scaled(uint64) and
/// frobenius(k).
template <class C>
class SparsePoly {
 public:
  using Coefficient = C;
  using TermMap = std::map<Exponents, C, HighVarGreater>;

  SparsePoly() = default;

  static SparsePoly constant(const C& c) {
    SparsePoly f;
    f.add_term({}, c);
    return f;
  }
  static SparsePoly variable(std::size_t index, const C& one, std::uint32_t exponent = 1) {
    Exponents e(index + 1, 0);
    e[index] = exponent;
    return monomial(std::move(e), one);
  }
  static SparsePoly monomial(Exponents e, const C& c) {
    SparsePoly f;
    f.add_term(std::move(e), c);
    return f;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  /// Coefficient of the empty monomial, if present.
  std::optional<C> constant_coefficient() const {
    auto it = terms_.find(Exponents{});
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  /// Largest variable index present; -1 when no variable occurs.
  int max_variable() const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()) - 1);
    return m;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
      if (var < e.size()) d = std::max(d, e[var]);
    }
    return d;
  }
  std::uint64_t total_degree() const {
    return terms_.empty() ? 0 : frobdiff::total_degree(terms_.begin()->first);
  }

  void add_term(Exponents e, const C& c) {
    if (c.is_zero()) return;
    trim_exponents(e);
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

  SparsePoly times(const C& c) const {
    SparsePoly r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
  }
  SparsePoly scaled(std::uint64_t n) const {
    SparsePoly r;
    for (const auto& [e, x] : terms_) r.add_term(e, x.scaled(n));
    return r;
  }
  SparsePoly pow(std::uint64_t e, const C& one) const {
    SparsePoly result = constant(one);
    SparsePoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// f^{p^k}: coefficients to the p^k-th power, exponents scaled by p^k.
  SparsePoly frobenius(unsigned k, std::uint32_t p) const {
    std::uint64_t factor = 1;
    for (unsigned i = 0; i < k; ++i) factor *= p;
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
      Exponents s = e;
      for (auto& x : s) x = static_cast<std::uint32_t>(x * factor);
      r.add_term(std::move(s), c.frobenius(k));
    }
    return r;
  }

  /// Formal partial derivative in variable `var`.
  SparsePoly partial(std::size_t var) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
      if (var >= e.size() || e[var] == 0) continue;
      Exponents d = e;
      std::uint64_t k = d[var]--;
      r.add_term(std::move(d), c.scaled(k));
    }
    return r;
  }

  /// Coefficients in `var`; entry d multiplies var^d.
  std::vector<SparsePoly> coefficients_in(std::size_t var) const {
    std::vector<SparsePoly> out(is_zero() ? 0 : degree_in(var) + 1);
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      std::uint32_t d = var < rest.size() ? rest[var] : 0;
      if (var < rest.size()) rest[var] = 0;
      out[d].add_term(std::move(rest), c);
    }
    return out;
  }

  template <class F>
  SparsePoly map_coefficients(F&& fn) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Square-and-multiply power in any ring with operator*.
template <class V>
V ring_pow(const V& base, std::uint64_t e, const V& one) {
  V result = one;
  V b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

/// Substitutes values[i] for v_i and evaluates in the ring of `one`.
/// `embed` maps coefficients into that ring.
template <class C, class V, class Embed>
V substitute(const SparsePoly<C>& f, std::span<const V> values, const V& one, Embed&& embed) {
  V result = one - one;
  std::vector<std::vector<V>> powers(values.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> V {
    if (e >= 16) return ring_pow(values[i], e, one);
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  for (const auto& [e, c] : f.terms()) {
    if (e.size() > values.size()) throw Error(ErrorCode::InsufficientJets, "not enough values to substitute");
    V term = embed(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * power(i, e[i]);
    }
    result = result + term;
  }
  return result;
}

}  // namespace frobdiff
