#include "frobdiff/reduction.hpp"

#include <algorithm>

namespace frobdiff {

DiffPoly combine_system(const std::vector<DiffPoly>& fs, const RatFunc& t, unsigned big_n) {
  if (fs.empty()) throw Error(ErrorCode::ShapeViolation, "combine_system needs at least one polynomial");
  if (t.pth_root()) throw Error(ErrorCode::BadTwist, "the twist element must not be a p-th power");
  const std::uint32_t p = t.p();
  std::uint64_t pn = 1;
  for (unsigned i = 0; i < big_n && pn <= fs.size(); ++i) pn *= p;
  if (fs.size() >= pn) throw Error(ErrorCode::BadExponent, "need m < p^N");
  DiffPoly out;
  RatFunc weight = t.one_like();
  for (const auto& f : fs) {
    out += f.frobenius(big_n, p).times(weight);
    weight = weight * t;
  }
  return out;
}

namespace {

// A differential polynomial with denominators cleared, seen in F_p[t, X]:
// variables 0..k-1 are the generators, k + i is X^(i).
struct Flat {
  Poly poly;
  Poly multiplier;       // in F_p[t]
  Poly multiplier_flat;  // the same, in F_p[t, X]
};

Poly lcm(const Poly& a, const Poly& b) { return exact_quotient(a * b, gcd(a, b)); }

Flat flatten(const FieldSpec& field, const DiffPoly& f, std::size_t width) {
  const std::size_t k = field.nvars();
  Poly d = Poly::constant(field.p, k, 1);
  for (const auto& [e, c] : f.terms()) d = lcm(d, c.den());
  Poly out(field.p, k + width);
  for (const auto& [e, c] : f.terms()) {
    Poly scaled = c.num() * exact_quotient(d, c.den());
    for (const auto& [te, tc] : scaled.terms()) {
      Exponents full(k + width, 0);
      std::copy(te.begin(), te.end(), full.begin());
      for (std::size_t i = 0; i < e.size(); ++i) full[k + i] = e[i];
      out.add_term(full, tc);
    }
  }
  Poly lifted(field.p, k + width);
  for (const auto& [te, tc] : d.terms()) {
    Exponents full(k + width, 0);
    std::copy(te.begin(), te.end(), full.begin());
    lifted.add_term(full, tc);
  }
  return Flat{out, d, lifted};
}

DiffPoly unflatten(const FieldSpec& field, const Poly& f) {
  const std::size_t k = field.nvars();
  std::map<Exponents, Poly, HighVarGreater> grouped;
  for (const auto& [e, c] : f.terms()) {
    Exponents jet(e.begin() + static_cast<std::ptrdiff_t>(k), e.end());
    trim_exponents(jet);
    Exponents te(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
    auto it = grouped.try_emplace(jet, Poly(field.p, k)).first;
    it->second.add_term(te, c);
  }
  DiffPoly out;
  for (auto& [jet, c] : grouped) out.add_term(jet, RatFunc(c));
  return out;
}

Poly content_in(const Poly& f, std::size_t var) {
  Poly g(f.p(), f.nvars());
  for (const auto& c : f.coefficients_in(var)) {
    if (!c.is_zero()) g = gcd(g, c);
  }
  return g;
}

Poly leading_in(const Poly& f, std::size_t var) { return f.coefficients_in(var).back(); }

std::size_t jet_width(const DiffPoly& f, const DiffPoly& g) {
  return static_cast<std::size_t>(std::max({f.max_variable(), g.max_variable(), 0})) + 1;
}

int checked_order(const DiffPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::LeaderMismatch, "the zero polynomial has no leader");
  return order(f);
}

struct Combination {
  Poly r, s, t;  // r = s F + t G
};

void remove_common(Combination& c) {
  Poly g = gcd(gcd(c.r, c.s), c.t);
  if (g.is_zero() || g.is_constant()) return;
  c.r = exact_quotient(c.r, g);
  c.s = exact_quotient(c.s, g);
  c.t = exact_quotient(c.t, g);
}

}  // namespace

CoprimeSplit coprime_reduce(const FieldSpec& field, const DiffPoly& f, const DiffPoly& g, int m) {
  if (checked_order(f) != m || m < 0) throw Error(ErrorCode::LeaderMismatch, "order(f) must equal the leader order");
  if (!g.is_zero() && order(g) > m) throw Error(ErrorCode::LeaderMismatch, "order(g) exceeds order(f)");
  const std::size_t width = jet_width(f, g);
  const std::size_t leader = field.nvars() + static_cast<std::size_t>(m);
  Flat ff = flatten(field, f, width);
  Flat fg = flatten(field, g, width);
  Poly common = gcd(ff.poly, fg.poly);
  if (!common.involves(leader)) return CoprimeSplit{f, DiffPoly::constant(RatFunc::one(field))};
  common = exact_quotient(common, content_in(common, leader));
  Poly rest = exact_quotient(ff.poly, common);
  DiffPoly reduced = unflatten(field, rest).times(RatFunc(ff.multiplier).inverse());
  return CoprimeSplit{reduced, unflatten(field, common)};
}

EliminationResult gcd_eliminate(const FieldSpec& field, const DiffPoly& f, const DiffPoly& g) {
  const int m = checked_order(f);
  if (m < 0) throw Error(ErrorCode::LeaderMismatch, "f is constant and has no leader");
  if (g.is_zero()) throw Error(ErrorCode::NotCoprime, "g = 0 shares the leader factor of f");
  if (order(g) > m) throw Error(ErrorCode::LeaderMismatch, "order(g) exceeds order(f)");
  const std::size_t width = jet_width(f, g);
  const std::size_t nflat = field.nvars() + width;
  const std::size_t v = field.nvars() + static_cast<std::size_t>(m);
  Flat ff = flatten(field, f, width);
  Flat fg = flatten(field, g, width);
  Poly zero(field.p, nflat);
  Poly one = Poly::constant(field.p, nflat, 1);

  Combination a{ff.poly, one, zero};
  Combination b{fg.poly, zero, one};
  while (b.r.degree_in(v) > 0) {
    if (a.r.degree_in(v) < b.r.degree_in(v)) std::swap(a, b);
    // lc^delta a.r = quotient * b.r + remainder
    const std::uint32_t db = b.r.degree_in(v);
    const Poly lc = leading_in(b.r, v);
    std::uint32_t delta = a.r.degree_in(v) - db + 1;
    Poly quotient = zero;
    Poly rem = a.r;
    while (!rem.is_zero() && rem.degree_in(v) >= db) {
      std::uint32_t shift = rem.degree_in(v) - db;
      Poly term = leading_in(rem, v) * Poly::variable(field.p, nflat, v, shift);
      quotient = lc * quotient + term;
      rem = lc * rem - term * b.r;
      --delta;
    }
    Poly lift = lc.pow(delta);
    quotient = quotient * lift;
    rem = rem * lift;
    Poly scale = lc.pow(a.r.degree_in(v) - db + 1);
    Combination next{rem, scale * a.s - quotient * b.s, scale * a.t - quotient * b.t};
    if (next.r.is_zero()) throw Error(ErrorCode::NotCoprime, "f and g share a factor involving the leader");
    remove_common(next);
    a = std::move(b);
    b = std::move(next);
  }
  // b.r = b.s F + b.t G with F = Df f and G = Dg g
  Combination out{b.r, b.s * ff.multiplier_flat, b.t * fg.multiplier_flat};
  remove_common(out);
  const RatFunc lead = RatFunc(Poly::constant(field.p, field.nvars(), out.r.leading_coefficient()));
  auto back = [&](const Poly& x) { return unflatten(field, x).times(lead.inverse()); };
  return EliminationResult{back(out.s), back(out.t), back(out.r), RatFunc(ff.multiplier), RatFunc(fg.multiplier)};
}

PipelineReport pipeline_reduce(const FieldSpec& field, const DiffPoly& f, const DiffPoly& g) {
  PipelineReport report;
  report.reduced_f = f;
  const int m = checked_order(f);
  while (true) {
    auto split = coprime_reduce(field, report.reduced_f, g, m);
    if (split.common.is_constant()) break;
    report.removed_factors.push_back(split.common);
    report.reduced_f = split.reduced;
    if (report.reduced_f.is_constant() || order(report.reduced_f) != m) break;
  }
  report.elimination = gcd_eliminate(field, report.reduced_f, g);
  report.note =
      "any solution of f = 0 and gtilde != 0 solves f = 0 and g != 0, since gtilde = p*f + q*g";
  return report;
}

std::optional<RatFunc> wood_solve(const FrobDerivation& d, const DiffPoly& f, const DiffPoly& g,
                                  const SearchConfig& config) {
  if (f.is_zero() || f.is_constant()) throw Error(ErrorCode::ShapeViolation, "f must have order >= 0");
  if (g.is_zero()) throw Error(ErrorCode::ShapeViolation, "g must be nonzero");
  const int m = order(f);
  if (separant(f).is_zero()) throw Error(ErrorCode::ShapeViolation, "the separant of f vanishes");
  if (order(g) >= m) throw Error(ErrorCode::ShapeViolation, "order(g) must be below order(f)");
  auto witness = search_first(d.field(), config, [&](const RatFunc& a) {
    auto js = jets(d, a, static_cast<std::size_t>(m) + 1);
    std::span<const RatFunc> view(js);
    return evaluate(d, f, view).is_zero() && !evaluate(d, g, view.first(static_cast<std::size_t>(std::max(order(g), 0)) + 1)).is_zero();
  });
  if (witness) {
    if (!evaluate_at(d, f, *witness).is_zero() || evaluate_at(d, g, *witness).is_zero()) {
      throw std::logic_error("wood_solve witness failed re-verification");
    }
  }
  return witness;
}

}  // namespace frobdiff
