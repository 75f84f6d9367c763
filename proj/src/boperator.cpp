#include "frobdiff/boperator.hpp"

#include <map>

namespace frobdiff {

AlgebraB AlgebraB::make(std::uint32_t p, std::vector<std::string> names,
                        const std::vector<std::vector<std::vector<std::int64_t>>>& table,
                        const std::vector<std::int64_t>& projection) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  const std::size_t d = names.size();
  if (d == 0) throw Error(ErrorCode::ShapeViolation, "algebra needs at least the basis element 1");
  if (table.size() != d || projection.size() != d)
    throw Error(ErrorCode::ShapeViolation, "structure table does not match the basis size");
  AlgebraB b;
  b.p_ = p;
  b.names_ = std::move(names);
  b.table_.reserve(d * d * d);
  for (const auto& row : table) {
    if (row.size() != d) throw Error(ErrorCode::ShapeViolation, "structure table does not match the basis size");
    for (const auto& entry : row) {
      if (entry.size() != d) throw Error(ErrorCode::ShapeViolation, "structure table does not match the basis size");
      for (auto c : entry) b.table_.push_back(fp::reduce(c, p));
    }
  }
  for (auto c : projection) b.projection_.push_back(fp::reduce(c, p));
  return b;
}

AlgebraB AlgebraB::dual_numbers(std::uint32_t p) {
  return make(p, {"1", "e"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
}

AlgebraB AlgebraB::product(std::uint32_t p) {
  return make(p, {"1", "b"}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {1, 0});
}

namespace {

std::string basis_product(const AlgebraB& b, std::size_t i, std::size_t j) {
  return b.names()[i] + "*" + b.names()[j];
}

// Coefficient vector of (b_i b_j) b_l or b_i (b_j b_l).
std::vector<Coeff> triple(const AlgebraB& b, std::size_t i, std::size_t j, std::size_t l, bool left) {
  const std::size_t d = b.dim();
  std::vector<Coeff> out(d, 0);
  for (std::size_t m = 0; m < d; ++m) {
    Coeff inner = left ? b.c(i, j, m) : b.c(j, l, m);
    if (inner == 0) continue;
    for (std::size_t k = 0; k < d; ++k) {
      Coeff outer = left ? b.c(m, l, k) : b.c(i, m, k);
      out[k] = fp::add(out[k], fp::mul(inner, outer, b.p()), b.p());
    }
  }
  return out;
}

}  // namespace

AlgebraVerdict validate_algebra(const AlgebraB& b) {
  const std::size_t d = b.dim();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      Coeff want = j == k ? 1 : 0;
      if (b.c(0, j, k) != want || b.c(j, 0, k) != want)
        return {false, "unit: " + basis_product(b, 0, j) + " != " + b.names()[j]};
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (b.c(i, j, k) != b.c(j, i, k))
          return {false, "commutativity: " + basis_product(b, i, j) + " != " + basis_product(b, j, i)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        if (triple(b, i, j, l, true) != triple(b, i, j, l, false))
          return {false, "associativity: (" + basis_product(b, i, j) + ")*" + b.names()[l] + " != " + b.names()[i] +
                             "*(" + basis_product(b, j, l) + ")"};
  for (std::size_t i = 0; i < d; ++i) {
    Coeff want = i == 0 ? 1 : 0;
    if (b.projection(i) != want) return {false, "projection: pi(" + b.names()[i] + ") != " + std::to_string(want)};
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Coeff image = 0;
      for (std::size_t k = 0; k < d; ++k) image = fp::add(image, fp::mul(b.c(i, j, k), b.projection(k), b.p()), b.p());
      if (image != fp::mul(b.projection(i), b.projection(j), b.p()))
        return {false, "projection: pi(" + basis_product(b, i, j) + ") != pi(" + b.names()[i] + ")pi(" +
                           b.names()[j] + ")"};
    }
  return {};
}

BOperator::BOperator(AlgebraB algebra, FieldSpec field, std::vector<std::vector<Poly>> images)
    : algebra_(std::move(algebra)), field_(std::move(field)), images_(std::move(images)) {
  if (auto verdict = validate_algebra(algebra_); !verdict.ok)
    throw Error(ErrorCode::NotValidated, "algebra rejected: " + verdict.violation);
  if (algebra_.p() != field_.p) throw Error(ErrorCode::FieldMismatch, "algebra and field characteristics differ");
  if (images_.size() != field_.nvars())
    throw Error(ErrorCode::ShapeViolation, "expected one image row per generator");
  for (const auto& row : images_) {
    if (row.size() + 1 != algebra_.dim())
      throw Error(ErrorCode::ShapeViolation, "expected one image per non-unit basis element");
    for (const auto& f : row)
      if (f.p() != field_.p || f.nvars() != field_.nvars())
        throw Error(ErrorCode::ShapeViolation, "image lives in a different polynomial ring");
  }
}

std::vector<Poly> bop_multiply(const AlgebraB& b, const std::vector<Poly>& x, const std::vector<Poly>& y) {
  const std::size_t d = b.dim();
  std::vector<Poly> out(d, Poly(x[0].p(), x[0].nvars()));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Poly xy = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k)
        if (Coeff c = b.c(i, j, k)) out[k] += xy.scaled(c);
    }
  }
  return out;
}

std::vector<Poly> bop_apply(const BOperator& op, const Poly& r) {
  const AlgebraB& b = op.algebra();
  const FieldSpec& f = op.field();
  if (r.p() != f.p || r.nvars() != f.nvars()) throw Error(ErrorCode::FieldMismatch, "polynomial from another ring");
  const std::size_t d = b.dim();
  const Poly zero(f.p, f.nvars());

  std::vector<Poly> unit(d, zero);
  unit[0] = Poly::constant(f.p, f.nvars(), 1);
  // powers[i][e] is the image of t_i^e, filled on demand
  std::vector<std::vector<std::vector<Poly>>> powers(f.nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const std::vector<Poly>& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(unit);
      std::vector<Poly> gen(d, zero);
      gen[0] = Poly::variable(f.p, f.nvars(), i);
      for (std::size_t k = 1; k < d; ++k) gen[k] = op.image(i, k);
      cache.push_back(std::move(gen));
    }
    while (cache.size() <= e) cache.push_back(bop_multiply(b, cache.back(), cache[1]));
    return cache[e];
  };

  std::vector<Poly> out(d, zero);
  for (const auto& [e, c] : r.terms()) {
    std::vector<Poly> m = unit;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) m = bop_multiply(b, m, power(i, e[i]));
    for (std::size_t k = 0; k < d; ++k) out[k] += m[k].scaled(c);
  }
  return out;
}

bool bop_constants(const BOperator& op, const Poly& r) {
  auto parts = bop_apply(op, r);
  for (std::size_t k = 1; k < parts.size(); ++k)
    if (!parts[k].is_zero()) return false;
  return true;
}

bool bop_constants(const BOperator& op, const RatFunc& r) {
  auto u = bop_apply(op, r.num());
  auto v = bop_apply(op, r.den());
  for (std::size_t k = 1; k < u.size(); ++k)
    if (!(r.den() * u[k] == r.num() * v[k])) return false;
  return true;
}

}  // namespace frobdiff
