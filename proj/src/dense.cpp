#include "dense.hpp"

#include <algorithm>

namespace frobdiff::dense {

namespace {

using UD = std::vector<Coeff>;  // low degree first, no trailing zeros
using BD = std::vector<UD>;     // rows by degree in the main variable

void trim(UD& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(BD& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

UD mul(const UD& a, const UD& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UD out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = static_cast<Coeff>((out[i + j] + ai * b[j]) % p);
  }
  return out;
}

// a -= b
void sub_in_place(UD& a, const UD& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = fp::sub(a[i], b[i], p);
  trim(a);
}

// Returns the quotient and leaves the remainder in a.
UD divrem(UD& a, const UD& b, std::uint32_t p) {
  if (a.size() < b.size()) return {};
  UD q(a.size() - b.size() + 1, 0);
  const Coeff lead_inv = fp::inv(b.back(), p);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const Coeff c = fp::mul(a[k], lead_inv, p);
    if (c == 0) continue;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = fp::sub(a[shift + j], fp::mul(c, b[j], p), p);
  }
  trim(a);
  trim(q);
  return q;
}

UD monic(UD f, std::uint32_t p) {
  if (f.empty()) return f;
  const Coeff inv = fp::inv(f.back(), p);
  for (auto& c : f) c = fp::mul(c, inv, p);
  return f;
}

UD gcd(UD a, UD b, std::uint32_t p) {
  while (!b.empty()) {
    divrem(a, b, p);
    std::swap(a, b);
  }
  return monic(std::move(a), p);
}

std::optional<UD> exact(UD a, const UD& b, std::uint32_t p) {
  UD q = divrem(a, b, p);
  if (!a.empty()) return std::nullopt;
  return q;
}

UD content(const BD& f, std::uint32_t p) {
  UD g;
  for (const auto& row : f) {
    g = gcd(std::move(g), row, p);
    if (g.size() == 1) break;
  }
  return g;
}

BD divide_rows(BD f, const UD& c, std::uint32_t p) {
  if (c.size() == 1) return f;
  for (auto& row : f) row = *exact(std::move(row), c, p);
  return f;
}

// Pseudo-remainder; the result is only needed up to a factor
// in F_p[x], because primitive parts are taken afterwards.
BD pseudo_remainder(BD a, const BD& b, std::uint32_t p) {
  const std::size_t n = b.size() - 1;
  const UD& lb = b.back();
  while (a.size() >= b.size()) {
    const UD la = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (auto& row : a) row = mul(row, lb, p);
    for (std::size_t i = 0; i <= n; ++i) sub_in_place(a[i + shift], mul(la, b[i], p), p);
    trim(a);
  }
  return a;
}

// Variables x (inner) and y (main); a single variable is used as y with x unused.
struct Layout {
  std::size_t y;
  std::optional<std::size_t> x;
};

BD to_dense(const Poly& f, const Layout& l) {
  BD out(f.is_zero() ? 0 : f.degree_in(l.y) + 1);
  const std::size_t width = l.x ? f.degree_in(*l.x) + 1 : 1;
  for (auto& row : out) row.assign(width, 0);
  for (const auto& [e, c] : f.terms()) out[e[l.y]][l.x ? e[*l.x] : 0] = c;
  for (auto& row : out) trim(row);
  return out;
}

Poly from_dense(const BD& f, const Layout& l, std::uint32_t p, std::size_t nvars) {
  Poly out(p, nvars);
  Exponents e(nvars, 0);
  for (std::size_t j = 0; j < f.size(); ++j) {
    for (std::size_t i = 0; i < f[j].size(); ++i) {
      if (f[j][i] == 0) continue;
      e[l.y] = static_cast<std::uint32_t>(j);
      if (l.x) e[*l.x] = static_cast<std::uint32_t>(i);
      out.add_term(e, f[j][i]);
    }
  }
  return out;
}

UD column(const BD& f) {
  // the single-variable case stores the polynomial down the rows
  UD out(f.size(), 0);
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j].empty() ? 0 : f[j][0];
  trim(out);
  return out;
}

BD from_column(const UD& f) {
  BD out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j] != 0) out[j] = UD{f[j]};
  return out;
}

// The main variable is the one of lower degree: fewer remainder steps.
Layout layout(const Poly& a, const Poly& b, const std::vector<std::size_t>& vars) {
  if (vars.size() == 1) return {vars[0], std::nullopt};
  auto deg = [&](std::size_t v) { return std::max(a.degree_in(v), b.degree_in(v)); };
  if (deg(vars[0]) <= deg(vars[1])) return {vars[0], vars[1]};
  return {vars[1], vars[0]};
}

}  // namespace

std::optional<std::vector<std::size_t>> small_support(const Poly& a, const Poly& b) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (!a.involves(i) && !b.involves(i)) continue;
    if (vars.size() == 2) return std::nullopt;
    vars.push_back(i);
  }
  if (vars.empty()) return std::nullopt;
  return vars;
}

Poly gcd(const Poly& a, const Poly& b, const std::vector<std::size_t>& vars) {
  const std::uint32_t p = a.p();
  const Layout l = layout(a, b, vars);
  BD fa = to_dense(a, l);
  BD fb = to_dense(b, l);
  if (!l.x) return from_dense(from_column(gcd(column(fa), column(fb), p)), l, p, a.nvars());

  UD ca = content(fa, p);
  UD cb = content(fb, p);
  UD c = gcd(ca, cb, p);
  if (fa.size() == 1 || fb.size() == 1) return from_dense(BD{c}, l, p, a.nvars()).monic();
  fa = divide_rows(std::move(fa), ca, p);
  fb = divide_rows(std::move(fb), cb, p);
  if (fa.size() < fb.size()) std::swap(fa, fb);
  BD result;
  while (true) {
    BD r = pseudo_remainder(fa, fb, p);
    if (r.empty()) {
      result = std::move(fb);
      break;
    }
    if (r.size() == 1) {
      result = BD{UD{1}};
      break;
    }
    r = divide_rows(std::move(r), content(r, p), p);
    fa = std::move(fb);
    fb = std::move(r);
  }
  for (auto& row : result) row = mul(row, c, p);
  return from_dense(result, l, p, a.nvars()).monic();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b, const std::vector<std::size_t>& vars) {
  const std::uint32_t p = a.p();
  const Layout l = layout(a, b, vars);
  BD r = to_dense(a, l);
  const BD fb = to_dense(b, l);
  if (!l.x) {
    auto q = exact(column(r), column(fb), p);
    if (!q) return std::nullopt;
    return from_dense(from_column(*q), l, p, a.nvars());
  }
  if (r.size() < fb.size()) return std::nullopt;
  BD q(r.size() - fb.size() + 1);
  const std::size_t n = fb.size() - 1;
  while (!r.empty()) {
    if (r.size() < fb.size()) return std::nullopt;
    auto lq = exact(r.back(), fb.back(), p);
    if (!lq) return std::nullopt;
    const std::size_t shift = r.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) sub_in_place(r[i + shift], mul(*lq, fb[i], p), p);
    q[shift] = std::move(*lq);
    trim(r);
  }
  return from_dense(q, l, p, a.nvars());
}

}  // namespace frobdiff::dense
