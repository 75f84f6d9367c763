#include "frobdiff/poly.hpp"

#include "dense.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace frobdiff {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace fp {

Coeff pow(Coeff a, std::uint64_t e, std::uint32_t p) {
  Coeff result = 1 % p;
  Coeff base = a % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

Coeff inv(Coeff a, std::uint32_t p) {
  if (a % p == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  return pow(a, p - 2, p);
}

}  // namespace fp

FieldSpec FieldSpec::make(std::uint32_t p, std::vector<std::string> generators) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw Error(ErrorCode::InvalidField, "characteristic too large");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw Error(ErrorCode::InvalidField, "empty generator name");
    if (!seen.insert(g).second) throw Error(ErrorCode::InvalidField, "duplicate generator " + g);
  }
  return FieldSpec{p, std::move(generators)};
}

std::optional<std::size_t> FieldSpec::index_of(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::uint32_t checked_scale(std::uint32_t e, std::uint64_t factor) {
  std::uint64_t r = std::uint64_t{e} * factor;
  if (r > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::overflow_error("exponent overflow");
  }
  return static_cast<std::uint32_t>(r);
}

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint32_t>::max() / b) throw std::overflow_error("Frobenius power overflow");
    r *= b;
  }
  return r;
}

}  // namespace

Poly Poly::constant(std::uint32_t p, std::size_t nvars, std::int64_t c) {
  Poly f(p, nvars);
  f.add_term(Exponents(nvars, 0), fp::reduce(c, p));
  return f;
}

Poly Poly::variable(std::uint32_t p, std::size_t nvars, std::size_t index, std::uint32_t exponent) {
  Exponents e(nvars, 0);
  e.at(index) = exponent;
  return monomial(p, std::move(e), 1);
}

Poly Poly::monomial(std::uint32_t p, Exponents exponents, Coeff c) {
  Poly f(p, exponents.size());
  f.add_term(exponents, c % p);
  return f;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree() == 0;
}

bool Poly::is_one() const { return is_constant() && constant_value() == 1; }

Coeff Poly::constant_value() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? 0 : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return kMinusInfinity;
  return static_cast<int>(frobdiff::total_degree(terms_.begin()->first));
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero polynomial");
  return terms_.begin()->first;
}

Coeff Poly::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

void Poly::check_compatible(const Poly& other) const {
  if (p_ != other.p_ || nvars_ != other.nvars_) {
    throw Error(ErrorCode::FieldMismatch, "polynomials over different rings");
  }
}

void Poly::add_term(const Exponents& e, Coeff c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = fp::add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(p_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, fp::neg(c, p_));
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, fp::neg(c, p_));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.p_, a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, fp::mul(ca, cb, a.p_));
    }
  }
  return r;
}

Poly Poly::scaled(Coeff c) const {
  c %= p_;
  Poly r(p_, nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, fp::mul(x, c, p_));
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(p_, nvars_, 1);
  if (e == 0) return result;
  // Split off the p-adic part of e, which costs nothing via Frobenius.
  unsigned frob = 0;
  while (e % p_ == 0) {
    e /= p_;
    ++frob;
  }
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result.frobenius(frob);
}

Poly Poly::frobenius(unsigned k) const {
  if (k == 0) return *this;
  std::uint64_t factor = ipow(p_, k);
  Poly r(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents scaled(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) scaled[i] = checked_scale(e[i], factor);
    r.terms_.emplace_hint(r.terms_.end(), std::move(scaled), c);
  }
  return r;
}

std::optional<Poly> Poly::pth_root() const {
  Poly r(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents root(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] % p_ != 0) return std::nullopt;
      root[i] = e[i] / p_;
    }
    r.terms_.emplace_hint(r.terms_.end(), std::move(root), c);
  }
  return r;
}

Poly Poly::partial(std::size_t i) const {
  Poly r(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Coeff factor = e[i] % p_;
    if (factor == 0) continue;
    Exponents d = e;
    --d[i];
    r.add_term(d, fp::mul(c, factor, p_));
  }
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Coeff lc = leading_coefficient();
  if (lc == 1) return *this;
  return scaled(fp::inv(lc, p_));
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> out(is_zero() ? 0 : degree_in(var) + 1, Poly(p_, nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    out[e[var]].add_term(rest, c);
  }
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, std::size_t var) {
  if (coeffs.empty()) throw std::invalid_argument("from_coefficients needs a ring");
  Poly r(coeffs.front().p(), coeffs.front().nvars());
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [e, c] : coeffs[d].terms()) {
      Exponents shifted = e;
      shifted[var] += static_cast<std::uint32_t>(d);
      r.add_term(shifted, c);
    }
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

int compare(const Poly& a, const Poly& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  GrlexGreater greater;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return greater(ia->first, ib->first) ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly q(a.p(), a.nvars());
  if (a.is_zero()) return q;
  if (b.is_constant()) return a.scaled(fp::inv(b.constant_value(), a.p()));
  if (auto vars = dense::small_support(a, b)) return dense::divide_exact(a, b, *vars);
  Poly r = a;
  const Exponents& lb = b.leading_exponents();
  Coeff lb_inv = fp::inv(b.leading_coefficient(), a.p());
  Exponents t(a.nvars());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      t[i] = lr[i] - lb[i];
    }
    Poly term = Poly::monomial(a.p(), t, fp::mul(r.leading_coefficient(), lb_inv, a.p()));
    q += term;
    r -= term * b;
  }
  return q;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::NotExact, "polynomial division is not exact");
  return *q;
}

namespace {

using UPoly = std::vector<Poly>;  // univariate in a main variable, low degree first

void trim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Poly content(const UPoly& f) {
  Poly g(f.front().p(), f.front().nvars());
  for (const auto& c : f) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly divide_content(const UPoly& f, const Poly& c) {
  if (c.is_one()) return f;
  UPoly out;
  out.reserve(f.size());
  for (const auto& x : f) out.push_back(exact_quotient(x, c));
  return out;
}

// Sparse pseudo-remainder: the caller only needs the result up to a factor
// in the coefficient ring, since primitive parts are taken afterwards.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t n = b.size() - 1;
  const Poly& lb = b.back();
  while (a.size() >= b.size()) {
    Poly la = a.back();
    std::size_t shift = a.size() - 1 - n;
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= n; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

// gcd(a, h^e): every common factor divides h, so peel gcd(c, h) off c
// while it is nontrivial. After e rounds h^e may still have factors left.
Poly gcd_with_power(const Poly& a, const Poly& h, std::uint64_t e) {
  Poly found = Poly::constant(a.p(), a.nvars(), 1);
  Poly c = a;
  for (std::uint64_t i = 0; i < e; ++i) {
    Poly k = gcd(c, h);
    if (k.is_one()) return found;
    found = found * k;
    c = exact_quotient(c, k);
  }
  return found * gcd(c, exact_quotient(h.pow(e), found));
}

Poly monomial_gcd(const Poly& mono, const Poly& f) {
  Exponents e = mono.leading_exponents();
  for (const auto& [ef, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], ef[i]);
  }
  return Poly::monomial(f.p(), e, 1);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.p() != b.p() || a.nvars() != b.nvars()) {
    throw Error(ErrorCode::FieldMismatch, "gcd of polynomials over different rings");
  }
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.p(), a.nvars(), 1);
  if (a == b) return a.monic();
  if (a.size() == 1) return monomial_gcd(a, b);
  if (b.size() == 1) return monomial_gcd(b, a);

  auto ra = a.pth_root();
  auto rb = b.pth_root();
  if (ra && rb) return gcd(*ra, *rb).frobenius(1);
  if (rb) return gcd_with_power(a, *rb, a.p());
  if (ra) return gcd_with_power(b, *ra, a.p());
  if (auto vars = dense::small_support(a, b)) return dense::gcd(a, b, *vars);

  std::size_t var = a.nvars();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a.involves(i) || b.involves(i)) {
      var = i;
      break;
    }
  }
  UPoly fa = a.coefficients_in(var);
  UPoly fb = b.coefficients_in(var);
  Poly ca = content(fa);
  Poly cb = content(fb);
  Poly c = gcd(ca, cb);
  if (fa.size() == 1 || fb.size() == 1) return c.monic();

  fa = divide_content(fa, ca);
  fb = divide_content(fb, cb);
  if (fa.size() < fb.size()) std::swap(fa, fb);
  UPoly result;
  while (true) {
    UPoly r = pseudo_remainder(fa, fb);
    if (r.empty()) {
      result = std::move(fb);
      break;
    }
    if (r.size() == 1) {
      result = UPoly{Poly::constant(a.p(), a.nvars(), 1)};
      break;
    }
    r = divide_content(r, content(r));
    fa = std::move(fb);
    fb = std::move(r);
  }
  return (c * Poly::from_coefficients(result, var)).monic();
}

namespace {

void append_monomial(std::string& out, const Exponents& e, const std::vector<std::string>& names) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
}

}  // namespace

std::string to_string(const Poly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    bool constant = frobdiff::total_degree(e) == 0;
    if (constant) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + '*';
    append_monomial(out, e, names);
  }
  return out;
}

}  // namespace frobdiff
