#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobdiff/error.hpp"

namespace frobdiff {

using Coeff = std::uint32_t;
using Exponents = std::vector<std::uint32_t>;

/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p on residues in [0, p).
namespace fp {

inline Coeff reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<Coeff>(r < 0 ? r + p : r);
}
inline Coeff add(Coeff a, Coeff b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Coeff>(s >= p ? s - p : s);
}
inline Coeff sub(Coeff a, Coeff b, std::uint32_t p) { return a >= b ? a - b : a + (p - b); }
inline Coeff neg(Coeff a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline Coeff mul(Coeff a, Coeff b, std::uint32_t p) {
  return static_cast<Coeff>((std::uint64_t{a} * b) % p);
}
Coeff pow(Coeff a, std::uint64_t e, std::uint32_t p);
Coeff inv(Coeff a, std::uint32_t p);

}  // namespace fp

/// The characteristic and ordered generator names of F_p(t_1, ..., t_k).
struct FieldSpec {
  std::uint32_t p = 2;
  std::vector<std::string> generators;

  /// Validates primality and generator names; throws InvalidField.
  static FieldSpec make(std::uint32_t p, std::vector<std::string> generators);

  std::size_t nvars() const { return generators.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Graded lexicographic order, first variable most significant. Used as a
/// "greater" comparator so that maps iterate from the leading term down.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint64_t total_degree(const Exponents& e);

/// Sparse multivariate polynomial over F_p in a fixed number of variables.
class Poly {
 public:
  using TermMap = std::map<Exponents, Coeff, GrlexGreater>;

  Poly() = default;
  Poly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static Poly constant(std::uint32_t p, std::size_t nvars, std::int64_t c);
  static Poly variable(std::uint32_t p, std::size_t nvars, std::size_t index,
                       std::uint32_t exponent = 1);
  static Poly monomial(std::uint32_t p, Exponents exponents, Coeff c);

  std::uint32_t p() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant term value; only meaningful when is_constant().
  Coeff constant_value() const;

  int total_degree() const;
  const Exponents& leading_exponents() const;
  Coeff leading_coefficient() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Coeff c) const;
  Poly pow(std::uint64_t e) const;

  /// Returns f^{p^k}; computed termwise since c^p = c in F_p.
  Poly frobenius(unsigned k) const;
  /// Returns g with g^p = f when every exponent is divisible by p.
  std::optional<Poly> pth_root() const;
  /// Formal partial derivative in variable i.
  Poly partial(std::size_t i) const;
  Poly monic() const;

  /// Coefficients of f viewed as a univariate polynomial in `var`; entry d
  /// multiplies var^d and does not involve `var`.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var);

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, Coeff c);

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_compatible(const Poly& other) const;

  std::uint32_t p_ = 2;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Quotient a / b when b divides a exactly.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// As divide_exact, throwing NotExact otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Three-way comparison of term maps in graded-lex order (for deterministic
/// tie-breaking only).
int compare(const Poly& a, const Poly& b);

std::string to_string(const Poly& f, const std::vector<std::string>& names);

}  // namespace frobdiff
