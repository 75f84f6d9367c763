#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frobdiff/derivation.hpp"

namespace frobdiff {

/// s^{p^exponent} = value, with value in the base field.
struct InseparableGenerator {
  std::string name;
  unsigned exponent = 1;
  RatFunc value;
};

/// Purely inseparable extension L = K(s_1, ..., s_r) of K = F_p(t). The
/// monomials s^a with 0 <= a_j < p^{e_j} form a K-basis of L.
class Tower {
 public:
  /// Throws BasisViolation unless the values are p-independent in K, which
  /// is exactly when the monomial basis above is free.
  static std::shared_ptr<const Tower> make(FieldSpec base, std::vector<InseparableGenerator> gens);

  const FieldSpec& base() const { return base_; }
  std::uint32_t p() const { return base_.p; }
  const std::vector<InseparableGenerator>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  /// p^{e_j}: exponents of s_j stay below this bound.
  const std::vector<std::uint32_t>& bounds() const { return bounds_; }
  /// [L : K].
  std::size_t degree() const;
  /// Smallest E with L^{p^E} contained in K.
  unsigned height() const { return height_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// All basis exponents in ascending lexicographic order.
  std::vector<Exponents> basis() const;

 private:
  Tower(FieldSpec base, std::vector<InseparableGenerator> gens);

  FieldSpec base_;
  std::vector<InseparableGenerator> gens_;
  std::vector<std::uint32_t> bounds_;
  unsigned height_ = 0;
};

/// Element of L written in the canonical monomial basis over K.
class TowerElem {
 public:
  using TermMap = std::map<Exponents, RatFunc, GrlexGreater>;

  TowerElem() = default;
  explicit TowerElem(std::shared_ptr<const Tower> tower);

  static TowerElem from_base(std::shared_ptr<const Tower> tower, const RatFunc& c);
  static TowerElem generator(std::shared_ptr<const Tower> tower, std::size_t j);
  /// Builds sum c_a s^a, reducing exponents with s_j^{p^{e_j}} = w_j.
  static TowerElem from_terms(std::shared_ptr<const Tower> tower, const std::vector<std::pair<Exponents, RatFunc>>& terms);

  const std::shared_ptr<const Tower>& tower() const { return tower_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the basis monomial s^a (zero if absent).
  RatFunc coefficient(const Exponents& a) const;
  /// True when the element lies in K.
  bool in_base() const;

  TowerElem operator-() const;
  friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inverse(); }
  TowerElem& operator+=(const TowerElem& b) { return *this = *this + b; }

  TowerElem scaled(std::uint64_t c) const;
  TowerElem times(const RatFunc& c) const;
  TowerElem pow(std::uint64_t e) const;
  TowerElem frobenius(unsigned k) const;
  TowerElem inverse() const;

  friend bool operator==(const TowerElem& a, const TowerElem& b) { return a.terms_ == b.terms_; }

 private:
  void add_reduced(const Exponents& a, const RatFunc& c);
  void check_same(const TowerElem& other) const;

  std::shared_ptr<const Tower> tower_;
  TermMap terms_;
};

/// The extension of an Fr^n-derivation of K to the tower, given the images
/// of the inseparable generators.
class TowerDerivation {
 public:
  using Element = TowerElem;

  /// Throws InconsistentTower unless every w_j is a constant of the base
  /// derivation (forced by s_j^{p^{e_j}} = w_j).
  TowerDerivation(std::shared_ptr<const Tower> tower, FrobDerivation base, std::vector<TowerElem> images);

  const std::shared_ptr<const Tower>& tower() const { return tower_; }
  const FrobDerivation& base() const { return base_; }
  unsigned n() const { return base_.n(); }
  std::uint32_t p() const { return base_.p(); }
  std::uint64_t q() const { return base_.q(); }
  const std::vector<TowerElem>& images() const { return images_; }

  TowerElem derive(const TowerElem& a) const;
  TowerElem derive_iter(const TowerElem& a, unsigned k) const;
  bool is_constant(const TowerElem& a) const { return derive(a).is_zero(); }

  TowerElem embed(const RatFunc& c) const { return TowerElem::from_base(tower_, c); }
  TowerElem zero() const { return TowerElem(tower_); }
  TowerElem one() const { return embed(base_.one()); }
  TowerElem generator(std::size_t j) const { return TowerElem::generator(tower_, j); }

 private:
  std::shared_ptr<const Tower> tower_;
  FrobDerivation base_;
  std::vector<TowerElem> images_;
};

/// Canonical text such as "lam*x + mu*y".
std::string to_string(const TowerElem& a);

}  // namespace frobdiff
