#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "frobdiff/poly.hpp"

namespace frobdiff {

/// Element of F_p(t_1, ..., t_k) in canonical form: gcd(num, den) = 1 and
/// the graded-lex leading coefficient of den is 1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc zero(std::uint32_t p, std::size_t nvars);
  static RatFunc one(std::uint32_t p, std::size_t nvars);
  static RatFunc constant(std::uint32_t p, std::size_t nvars, std::int64_t c);
  static RatFunc generator(std::uint32_t p, std::size_t nvars, std::size_t index);
  /// Caller guarantees gcd(num, den) = 1; only the leading coefficient is fixed.
  static RatFunc reduced(Poly num, Poly den);
  static RatFunc zero(const FieldSpec& f) { return zero(f.p, f.nvars()); }
  static RatFunc one(const FieldSpec& f) { return one(f.p, f.nvars()); }
  static RatFunc constant(const FieldSpec& f, std::int64_t c) { return constant(f.p, f.nvars(), c); }
  static RatFunc generator(const FieldSpec& f, std::size_t index) { return generator(f.p, f.nvars(), index); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::uint32_t p() const { return num_.p(); }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True for elements of the prime field.
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  RatFunc zero_like() const { return zero(p(), nvars()); }
  RatFunc one_like() const { return one(p(), nvars()); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc inverse() const;
  RatFunc scaled(std::uint64_t c) const;
  RatFunc pow(std::int64_t e) const;
  /// a^{p^k}.
  RatFunc frobenius(unsigned k) const;
  std::optional<RatFunc> pth_root() const;
  /// Classical partial derivative d/dt_i.
  RatFunc partial(std::size_t i) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(Canonical, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Inverse Frobenius on p-th powers, zero elsewhere.
RatFunc lambda0(const RatFunc& a);

enum class FieldOp { Add, Sub, Mul, Div };
RatFunc field_arith(FieldOp op, const RatFunc& a, const RatFunc& b);

/// Deterministic total order on canonical forms.
int compare(const RatFunc& a, const RatFunc& b);

/// Canonical text: numerator, or "num/den" with parentheses around
/// multi-term parts.
std::string to_string(const RatFunc& a, const FieldSpec& field);

}  // namespace frobdiff
