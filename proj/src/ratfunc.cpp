#include "frobdiff/ratfunc.hpp"

#include <algorithm>

namespace frobdiff {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.p(), num_.nvars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num.p() != den.p() || num.nvars() != den.nvars()) {
    throw Error(ErrorCode::FieldMismatch, "numerator and denominator over different rings");
  }
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = Poly::constant(num_.p(), num_.nvars(), 1);
    return;
  }
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  Coeff lc = den.leading_coefficient();
  if (lc != 1) {
    Coeff inv = fp::inv(lc, den.p());
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::reduced(Poly num, Poly den) {
  if (num.is_zero()) return zero(den.p(), den.nvars());
  Coeff lc = den.leading_coefficient();
  if (lc != 1) {
    Coeff inv = fp::inv(lc, den.p());
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(Canonical{}, std::move(num), std::move(den));
}

RatFunc RatFunc::zero(std::uint32_t p, std::size_t nvars) {
  return RatFunc(Canonical{}, Poly(p, nvars), Poly::constant(p, nvars, 1));
}

RatFunc RatFunc::one(std::uint32_t p, std::size_t nvars) {
  return RatFunc(Canonical{}, Poly::constant(p, nvars, 1), Poly::constant(p, nvars, 1));
}

RatFunc RatFunc::constant(std::uint32_t p, std::size_t nvars, std::int64_t c) {
  return RatFunc(Canonical{}, Poly::constant(p, nvars, c), Poly::constant(p, nvars, 1));
}

RatFunc RatFunc::generator(std::uint32_t p, std::size_t nvars, std::size_t index) {
  return RatFunc(Canonical{}, Poly::variable(p, nvars, index), Poly::constant(p, nvars, 1));
}

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

namespace {

RatFunc add_impl(const RatFunc& a, const RatFunc& b, bool subtract) {
  const Poly bn = subtract ? -b.num() : b.num();
  if (a.is_zero()) return subtract ? -b : b;
  if (b.is_zero()) return a;
  if (a.den() == b.den()) return RatFunc(a.num() + bn, a.den());
  // u + c/d = (ud + c)/d is already reduced
  if (b.den().is_one()) return RatFunc::reduced(a.num() + bn * a.den(), a.den());
  if (a.den().is_one()) return RatFunc::reduced(a.num() * b.den() + bn, b.den());
  // Henrici: with g = gcd(b1, b2) only g can share factors with the sum.
  Poly g = gcd(a.den(), b.den());
  Poly da = exact_quotient(a.den(), g);
  Poly db = exact_quotient(b.den(), g);
  Poly num = a.num() * db + bn * da;
  Poly den = da * b.den();
  if (num.is_zero() || g.is_one()) return RatFunc::reduced(std::move(num), std::move(den));
  Poly h = gcd(num, g);
  if (!h.is_one()) {
    num = exact_quotient(num, h);
    den = exact_quotient(den, h);
  }
  return RatFunc::reduced(std::move(num), std::move(den));
}

}  // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add_impl(a, b, false); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add_impl(a, b, true); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.zero_like();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num() * b.num());
  Poly g1 = gcd(a.num(), b.den());
  Poly g2 = gcd(b.num(), a.den());
  Poly num = exact_quotient(a.num(), g1) * exact_quotient(b.num(), g2);
  Poly den = exact_quotient(a.den(), g2) * exact_quotient(b.den(), g1);
  return RatFunc::reduced(std::move(num), std::move(den));
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::scaled(std::uint64_t c) const {
  Coeff r = static_cast<Coeff>(c % p());
  if (r == 0) return zero_like();
  return RatFunc(Canonical{}, num_.scaled(r), den_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return one_like();
  // Powers of a reduced fraction stay reduced and keep a monic denominator.
  return RatFunc(Canonical{}, num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RatFunc RatFunc::frobenius(unsigned k) const {
  return RatFunc(Canonical{}, num_.frobenius(k), den_.frobenius(k));
}

std::optional<RatFunc> RatFunc::pth_root() const {
  auto n = num_.pth_root();
  if (!n) return std::nullopt;
  auto d = den_.pth_root();
  if (!d) return std::nullopt;
  return RatFunc(Canonical{}, std::move(*n), std::move(*d));
}

RatFunc RatFunc::partial(std::size_t i) const {
  Poly top = num_.partial(i) * den_ - num_ * den_.partial(i);
  return RatFunc(std::move(top), den_ * den_);
}

RatFunc lambda0(const RatFunc& a) {
  auto r = a.pth_root();
  return r ? *r : a.zero_like();
}

RatFunc field_arith(FieldOp op, const RatFunc& a, const RatFunc& b) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  return a;
}

int compare(const RatFunc& a, const RatFunc& b) {
  int c = compare(a.num(), b.num());
  return c != 0 ? c : compare(a.den(), b.den());
}

std::string to_string(const RatFunc& a, const FieldSpec& field) {
  std::string num = to_string(a.num(), field.generators);
  if (a.is_polynomial()) return num;
  if (a.num().size() > 1) num = '(' + num + ')';
  std::string den = to_string(a.den(), field.generators);
  bool bare_den = a.den().size() == 1 && a.den().leading_coefficient() == 1 &&
                  std::count(den.begin(), den.end(), '*') == 0;
  if (!bare_den) den = '(' + den + ')';
  return num + '/' + den;
}

}  // namespace frobdiff
