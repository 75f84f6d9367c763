#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "frobdiff/derivation.hpp"
#include "frobdiff/diffpoly.hpp"
#include "frobdiff/ratfunc.hpp"

namespace frobdiff::check {

inline std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("FROBDIFF_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

inline Poly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t nvars, unsigned max_degree,
                        unsigned max_terms) {
  Poly f(p, nvars);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> coeff(1, p - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  unsigned n = nterms(rng);
  for (unsigned i = 0; i < n; ++i) {
    Exponents e(nvars, 0);
    unsigned budget = deg(rng);
    for (unsigned b = 0; b < budget; ++b) {
      std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
      ++e[var(rng)];
    }
    f.add_term(e, coeff(rng));
  }
  return f;
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t nvars, unsigned max_degree,
                                unsigned max_terms) {
  Poly f(p, nvars);
  while (f.is_zero()) f = random_poly(rng, p, nvars, max_degree, max_terms);
  return f;
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, const FieldSpec& field, unsigned max_degree = 2,
                              unsigned max_terms = 3) {
  Poly num = random_poly(rng, field.p, field.nvars(), max_degree, max_terms);
  Poly den = random_nonzero_poly(rng, field.p, field.nvars(), max_degree, max_terms);
  return RatFunc(num, den);
}

inline RatFunc random_nonzero_ratfunc(std::mt19937_64& rng, const FieldSpec& field, unsigned max_degree = 2,
                                      unsigned max_terms = 3) {
  RatFunc r = random_ratfunc(rng, field, max_degree, max_terms);
  while (r.is_zero()) r = random_ratfunc(rng, field, max_degree, max_terms);
  return r;
}

/// Random element of F_p[t] (polynomial, possibly zero).
inline RatFunc random_polynomial_elem(std::mt19937_64& rng, const FieldSpec& field, unsigned max_degree = 2,
                                      unsigned max_terms = 3) {
  return RatFunc(random_poly(rng, field.p, field.nvars(), max_degree, max_terms));
}

inline FrobDerivation random_derivation(std::mt19937_64& rng, const FieldSpec& field, unsigned n) {
  std::vector<RatFunc> images;
  for (std::size_t i = 0; i < field.nvars(); ++i) images.push_back(random_ratfunc(rng, field, 1, 2));
  return FrobDerivation(field, n, images);
}

/// Differential polynomial with random polynomial coefficients.
inline DiffPoly random_diffpoly(std::mt19937_64& rng, const FieldSpec& field, unsigned max_order,
                                unsigned max_degree, unsigned max_terms) {
  DiffPoly f;
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, max_order);
  unsigned n = nterms(rng);
  for (unsigned i = 0; i < n; ++i) {
    Exponents e(max_order + 1, 0);
    unsigned budget = deg(rng);
    for (unsigned b = 0; b < budget; ++b) ++e[var(rng)];
    f.add_term(e, RatFunc(random_nonzero_poly(rng, field.p, field.nvars(), 1, 2)));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Oracle: the twisted Leibniz extension computed straight from its defining
// rules (monomial rule plus quotient rule), independent of the library's
// partial-derivative formulation.

inline RatFunc oracle_derive_poly(const FrobDerivation& d, const Poly& u) {
  const FieldSpec& f = d.field();
  const std::uint64_t q = d.q();
  RatFunc out = RatFunc::zero(f);
  for (const auto& [e, c] : u.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      // a_i * prod_{j != i} t_j^{q a_j} * t_i^{q (a_i - 1)} * d(t_i)
      Exponents m(e.size(), 0);
      for (std::size_t j = 0; j < e.size(); ++j) m[j] = static_cast<std::uint32_t>(q * e[j]);
      m[i] -= static_cast<std::uint32_t>(q);
      Coeff factor = fp::mul(c, static_cast<Coeff>(e[i] % f.p), f.p);
      if (factor == 0) continue;
      out = out + RatFunc(Poly::monomial(f.p, m, factor)) * d.images()[i];
    }
  }
  return out;
}

inline RatFunc oracle_derive(const FrobDerivation& d, const RatFunc& a) {
  // d(u/v) = (v^q du - u^q dv) / v^{2q}, with powers by repeated multiplication.
  const std::uint64_t q = d.q();
  RatFunc u(a.num());
  RatFunc v(a.den());
  RatFunc uq = u.one_like(), vq = v.one_like();
  for (std::uint64_t i = 0; i < q; ++i) {
    uq = uq * u;
    vq = vq * v;
  }
  RatFunc top = vq * oracle_derive_poly(d, a.num()) - uq * oracle_derive_poly(d, a.den());
  return top / (vq * vq);
}

// Ring endomorphism of F_p[t] sending t_i to images[i], by direct expansion.
inline Poly substitute(const Poly& r, const std::vector<Poly>& images) {
  Poly out(r.p(), r.nvars());
  for (const auto& [e, c] : r.terms()) {
    Poly m = Poly::constant(r.p(), r.nvars(), c);
    for (std::size_t i = 0; i < e.size(); ++i) m = m * images[i].pow(e[i]);
    out += m;
  }
  return out;
}

}  // namespace frobdiff::check
