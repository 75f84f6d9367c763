#include "frobdiff/disjointness.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobdiff/linalg.hpp"

namespace frobdiff {

namespace {

unsigned log_p(std::uint64_t e, std::uint32_t p) {
  unsigned j = 0;
  while (e > 1) {
    if (e % p != 0) throw Error(ErrorCode::BadBasis, "subfield exponent " + std::to_string(e) + " is not a power of p");
    e /= p;
    ++j;
  }
  return j;
}

LinearRelation relations(const Matrix& m) {
  LinearRelation rel;
  auto null = nullspace(m);
  if (!null.empty()) {
    rel.dependent = true;
    rel.witness = std::move(null.front());
  }
  return rel;
}

void verify_relation(const LinearRelation& rel, std::span<const TowerElem> elements) {
  if (!rel.dependent) return;
  TowerElem sum(elements.front().tower());
  for (std::size_t i = 0; i < elements.size(); ++i) sum += elements[i].times(rel.witness[i]);
  if (!sum.is_zero()) throw std::logic_error("linear relation witness does not vanish");
}

}  // namespace

std::vector<RatFunc> subfield_coordinates(const RatFunc& c, const SubfieldSpec& sub) {
  const std::size_t k = c.nvars();
  if (sub.exponents.size() != k) throw Error(ErrorCode::BadBasis, "subfield description has wrong arity");
  unsigned height = 0;
  std::size_t dim = 1;
  for (auto e : sub.exponents) {
    if (e == 0) throw Error(ErrorCode::BadBasis, "subfield exponent must be positive");
    height = std::max(height, log_p(e, c.p()));
    dim *= e;
  }
  // c = u v^{P-1} / v^P with P = p^height, and v^P lies in F.
  Poly den = c.den().frobenius(height);
  Poly num = c.num();
  if (height > 0) {
    std::uint64_t big_p = 1;
    for (unsigned i = 0; i < height; ++i) big_p *= c.p();
    num = num * c.den().pow(big_p - 1);
  }
  std::vector<Poly> parts(dim, Poly(c.p(), k));
  for (const auto& [exps, coeff] : num.terms()) {
    std::size_t index = 0;
    Exponents rest = exps;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t r = static_cast<std::uint32_t>(exps[i] % sub.exponents[i]);
      index = index * sub.exponents[i] + r;
      rest[i] -= r;
    }
    parts[index].add_term(rest, coeff);
  }
  std::vector<RatFunc> coords;
  coords.reserve(dim);
  RatFunc rebuilt = c.zero_like();
  for (std::size_t index = 0; index < dim; ++index) {
    coords.emplace_back(parts[index], den);
    std::size_t rem = index;
    Exponents r(k, 0);
    for (std::size_t i = k; i-- > 0;) {
      r[i] = static_cast<std::uint32_t>(rem % sub.exponents[i]);
      rem /= sub.exponents[i];
    }
    if (!coords.back().is_zero()) rebuilt += coords.back() * RatFunc(Poly::monomial(c.p(), r, 1));
  }
  if (!(rebuilt == c)) throw Error(ErrorCode::BadBasis, "subfield expansion does not span the input");
  return coords;
}

std::vector<RatFunc> base_coordinates(const TowerElem& x) {
  std::vector<RatFunc> out;
  for (const auto& a : x.tower()->basis()) out.push_back(x.coefficient(a));
  return out;
}

DisjointnessReport linear_disjointness_check(const Tower& tower, std::span<const TowerElem> elements,
                                             const SubfieldSpec& sub,
                                             const std::function<bool(const TowerElem&)>& is_constant) {
  DisjointnessReport report;
  if (elements.empty()) {
    report.all_constants = true;
    return report;
  }
  const RatFunc zero = RatFunc::zero(tower.base());
  const std::size_t r = elements.size();
  const std::size_t deg = tower.degree();

  Matrix over_k(deg, r, zero);
  std::vector<std::vector<RatFunc>> k_coords;
  for (std::size_t i = 0; i < r; ++i) {
    if (elements[i].tower().get() != &tower) throw Error(ErrorCode::FieldMismatch, "element outside the tower");
    k_coords.push_back(base_coordinates(elements[i]));
    for (std::size_t row = 0; row < deg; ++row) over_k(row, i) = k_coords[i][row];
  }
  report.over_base = relations(over_k);

  std::size_t sub_dim = 1;
  for (auto e : sub.exponents) sub_dim *= e;
  Matrix over_f(deg * sub_dim, r, zero);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t row = 0; row < deg; ++row) {
      auto coords = subfield_coordinates(k_coords[i][row], sub);
      for (std::size_t s = 0; s < sub_dim; ++s) over_f(row * sub_dim + s, i) = coords[s];
    }
  }
  report.over_subfield = relations(over_f);

  verify_relation(report.over_base, elements);
  verify_relation(report.over_subfield, elements);
  report.all_constants = std::all_of(elements.begin(), elements.end(), is_constant);
  return report;
}

DisjointnessReport linear_disjointness_check(const TowerDerivation& d, std::span<const TowerElem> elements,
                                             const SubfieldSpec& sub) {
  return linear_disjointness_check(*d.tower(), elements, sub,
                                   [&d](const TowerElem& x) { return d.is_constant(x); });
}

}  // namespace frobdiff
