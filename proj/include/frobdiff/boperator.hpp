#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobdiff/poly.hpp"
#include "frobdiff/ratfunc.hpp"

namespace frobdiff {

/// Finite commutative F_p-algebra with basis b_0 = 1, b_1, ..., b_d given by
/// structure constants b_i b_j = sum_k c^k_ij b_k, and a projection pi to F_p.
class AlgebraB {
 public:
  /// table[i][j][k] = c^k_ij, projection[i] = pi(b_i). Throws ShapeViolation
  /// on mismatched sizes and InvalidField for a non-prime p.
  static AlgebraB make(std::uint32_t p, std::vector<std::string> names,
                       const std::vector<std::vector<std::vector<std::int64_t>>>& table,
                       const std::vector<std::int64_t>& projection);

  /// k[e] with e^2 = 0.
  static AlgebraB dual_numbers(std::uint32_t p);
  /// k x k in the basis (1, b) with b^2 = b; pi reads the first factor.
  static AlgebraB product(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  Coeff c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim() + j) * dim() + k]; }
  Coeff projection(std::size_t i) const { return projection_[i]; }

 private:
  AlgebraB() = default;

  std::uint32_t p_ = 2;
  std::vector<std::string> names_;
  std::vector<Coeff> table_;
  std::vector<Coeff> projection_;
};

struct AlgebraVerdict {
  bool ok = true;
  std::string violation;
};

/// Unit, commutativity, associativity and the pi-homomorphism, checked on
/// basis elements in that order. Reports the first failure.
AlgebraVerdict validate_algebra(const AlgebraB& b);

/// Operators r -> (r, d_1 r, ..., d_d r) on F_p[t] determined by the images
/// of the generators.
class BOperator {
 public:
  /// images[i][k-1] = d_k(t_i). Throws ShapeViolation on sizes or rings,
  /// NotValidated if the algebra fails validate_algebra.
  BOperator(AlgebraB algebra, FieldSpec field, std::vector<std::vector<Poly>> images);

  const AlgebraB& algebra() const { return algebra_; }
  const FieldSpec& field() const { return field_; }
  /// d_k(t_i) for k >= 1; d_0 is the identity.
  const Poly& image(std::size_t i, std::size_t k) const { return images_[i][k - 1]; }

 private:
  AlgebraB algebra_;
  FieldSpec field_;
  std::vector<std::vector<Poly>> images_;
};

/// Product in R (x) B of coefficient vectors.
std::vector<Poly> bop_multiply(const AlgebraB& b, const std::vector<Poly>& x, const std::vector<Poly>& y);

/// (d_0 r, ..., d_d r), extending the generator images multiplicatively.
std::vector<Poly> bop_apply(const BOperator& op, const Poly& r);

/// d_i r = 0 for every i >= 1.
bool bop_constants(const BOperator& op, const Poly& r);
/// Same for u/v, via v d_i(u) = u d_i(v); valid whenever the operator
/// extends to the fraction field.
bool bop_constants(const BOperator& op, const RatFunc& r);

}  // namespace frobdiff
