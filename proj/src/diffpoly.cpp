#include "frobdiff/diffpoly.hpp"

namespace frobdiff {

DiffPoly jet_variable(const FieldSpec& field, std::size_t i) {
  return DiffPoly::variable(i, RatFunc::one(field));
}

DiffPoly delta(const FrobDerivation& d, const DiffPoly& f) {
  const std::uint64_t q = d.q();
  DiffPoly result;
  for (const auto& [e, c] : f.terms()) {
    // d(c M) = c^q d(M) + M^q d(c)
    Exponents eq = e;
    for (auto& x : eq) x = static_cast<std::uint32_t>(x * q);
    RatFunc dc = d.derive(c);
    if (!dc.is_zero()) result.add_term(eq, dc);
    RatFunc cq = c.frobenius(d.n());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] % d.p() == 0) continue;
      Exponents m = eq;
      m[i] -= static_cast<std::uint32_t>(q);
      if (m.size() <= i + 1) m.resize(i + 2, 0);
      m[i + 1] += 1;
      result.add_term(std::move(m), cq.scaled(e[i]));
    }
  }
  return result;
}

DiffPoly delta_iter(const FrobDerivation& d, const DiffPoly& f, unsigned k) {
  DiffPoly r = f;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = delta(d, r);
  return r;
}

int order(const DiffPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of the zero differential polynomial");
  return f.max_variable();
}

std::uint32_t leader_degree(const DiffPoly& f) {
  int m = order(f);
  return m < 0 ? 0 : f.degree_in(static_cast<std::size_t>(m));
}

DiffPoly separant(const DiffPoly& f) {
  int m = order(f);
  if (m < 0) throw Error(ErrorCode::ConstantPolynomial, "separant of a constant");
  return f.partial(static_cast<std::size_t>(m));
}

KPoly coeff_derive(const FrobDerivation& d, const KPoly& f) {
  return f.map_coefficients([&d](const RatFunc& c) { return d.derive(c); });
}

std::string jet_name(std::size_t i, const std::string& base) {
  if (i == 0) return base;
  if (i == 1) return base + "'";
  if (i == 2) return base + "''";
  return base + "^(" + std::to_string(i) + ")";
}

std::string to_string(const SparsePoly<RatFunc>& f, const FieldSpec& field,
                      const std::function<std::string(std::size_t)>& var_name) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    std::string coeff = to_string(c, field);
    if (mono.empty()) {
      out += coeff;
    } else if (c.is_one()) {
      out += mono;
    } else {
      bool wrap = !c.is_polynomial() || c.num().size() > 1;
      out += (wrap ? '(' + coeff + ')' : coeff) + '*' + mono;
    }
  }
  return out;
}

std::string to_string(const DiffPoly& f, const FieldSpec& field) {
  return to_string(f, field, [](std::size_t i) { return jet_name(i); });
}

}  // namespace frobdiff
