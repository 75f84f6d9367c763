#include "frobdiff/geometry.hpp"

namespace frobdiff {

IdealGens IdealGens::make(std::vector<std::string> vars, std::vector<KPoly> gens) {
  if (gens.empty()) throw Error(ErrorCode::ShapeViolation, "an ideal needs at least one generator");
  for (const auto& g : gens) {
    if (g.max_variable() >= static_cast<int>(vars.size())) {
      throw Error(ErrorCode::ShapeViolation, "generator involves an undeclared variable");
    }
  }
  return IdealGens{std::move(vars), std::move(gens)};
}

namespace {

KPoly substitute_power(const KPoly& f, std::uint64_t q) {
  KPoly r;
  for (const auto& [e, c] : f.terms()) {
    Exponents s = e;
    for (auto& x : s) x = static_cast<std::uint32_t>(x * q);
    r.add_term(std::move(s), c);
  }
  return r;
}

}  // namespace

KPoly twist_derive_poly(const FrobDerivation& d, const KPoly& f, std::size_t m) {
  KPoly out = substitute_power(coeff_derive(d, f), d.q());
  const RatFunc one = d.one();
  for (std::size_t i = 0; i < m; ++i) {
    KPoly df = f.partial(i);
    if (df.is_zero()) continue;
    out += df.frobenius(d.n(), d.p()) * KPoly::variable(m + i, one);
  }
  return out;
}

KPoly classical_tangent_poly(const KPoly& f, std::size_t m) {
  KPoly out;
  for (std::size_t i = 0; i < m; ++i) {
    KPoly df = f.partial(i);
    if (df.is_zero()) continue;
    RatFunc one = df.terms().begin()->second.one_like();
    out += df * KPoly::variable(m + i, one);
  }
  return out;
}

ProlongedIdeal prolong(const IdealGens& v, const FrobDerivation& d) {
  const std::size_t m = v.nvars();
  std::vector<KPoly> gens = v.gens;
  for (const auto& g : v.gens) gens.push_back(twist_derive_poly(d, g, m));
  return ProlongedIdeal{IdealGens{prolonged_names(v.vars), std::move(gens)}, m};
}

std::vector<std::string> prolonged_names(const std::vector<std::string>& vars) {
  std::vector<std::string> out = vars;
  for (const auto& v : vars) out.push_back(v + "'");
  return out;
}

std::string to_string(const IdealGens& ideal, const FieldSpec& field) {
  std::string out;
  for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.gens[i], field, [&](std::size_t j) { return ideal.vars.at(j); });
  }
  return out;
}

}  // namespace frobdiff
