#include <gtest/gtest.h>

#include "frobdiff/boperator.hpp"
#include "frobdiff/disjointness.hpp"
#include "support.hpp"

using namespace frobdiff;

namespace {

Poly var(const FieldSpec& k, std::size_t i) { return Poly::variable(k.p, k.nvars(), i); }
Poly cst(const FieldSpec& k, std::int64_t c) { return Poly::constant(k.p, k.nvars(), c); }

BOperator dual_standard(std::uint32_t p) {
  auto k = FieldSpec::make(p, {"t"});
  return BOperator(AlgebraB::dual_numbers(p), k, {{cst(k, 1)}});
}

BOperator shift(std::uint32_t p) {
  auto k = FieldSpec::make(p, {"t"});
  return BOperator(AlgebraB::product(p), k, {{cst(k, 1)}});
}

}  // namespace

TEST(Algebra, Validation) {
  EXPECT_TRUE(validate_algebra(AlgebraB::dual_numbers(2)).ok);
  EXPECT_TRUE(validate_algebra(AlgebraB::product(3)).ok);

  // b1*b2 = b1 but b2*b1 = b2
  auto skew = AlgebraB::make(2, {"1", "u", "v"},
                             {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                              {{0, 1, 0}, {0, 0, 0}, {0, 1, 0}},
                              {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}}},
                             {1, 0, 0});
  auto verdict = validate_algebra(skew);
  EXPECT_FALSE(verdict.ok);
  EXPECT_EQ(verdict.violation.rfind("commutativity", 0), 0u) << verdict.violation;

  auto no_unit = AlgebraB::make(2, {"1", "e"}, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 0}}}, {1, 0});
  EXPECT_EQ(validate_algebra(no_unit).violation.rfind("unit", 0), 0u);

  // e^2 = 1 + e is commutative and associative but pi(e)^2 = 0 != pi(e^2) = 1
  auto bad_pi = AlgebraB::make(2, {"1", "e"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, {1, 0});
  EXPECT_EQ(validate_algebra(bad_pi).violation.rfind("projection", 0), 0u);

  auto k = FieldSpec::make(2, {"t"});
  EXPECT_THROW(BOperator(no_unit, k, {{cst(k, 1)}}), Error);
  try {
    BOperator(bad_pi, k, {{cst(k, 1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotValidated);
  }
  EXPECT_THROW(AlgebraB::make(2, {"1", "e"}, {{{1, 0}}}, {1, 0}), Error);
}

TEST(Apply, KnownValues) {
  for (std::uint32_t p : {3u, 5u}) {
    auto dual = dual_standard(p);
    const auto& k = dual.field();
    Poly t = var(k, 0);
    auto parts = bop_apply(dual, t * t);
    EXPECT_EQ(parts[0], t * t);
    EXPECT_EQ(parts[1], t.scaled(2));

    auto sigma = shift(p);
    parts = bop_apply(sigma, t * t);
    EXPECT_EQ(parts[0], t * t);
    EXPECT_EQ(parts[1], t.scaled(2) + cst(k, 1));

    parts = bop_apply(sigma, cst(k, 4));
    EXPECT_EQ(parts[0], cst(k, 4));
    EXPECT_TRUE(parts[1].is_zero());
  }
}

TEST(Constants, KnownValues) {
  for (std::uint32_t p : {2u, 3u, 7u}) {
    auto dual = dual_standard(p);
    const auto& k = dual.field();
    Poly t = var(k, 0);
    EXPECT_TRUE(bop_constants(dual, t.pow(p)));
    EXPECT_FALSE(bop_constants(dual, t));
    auto sigma = shift(p);
    EXPECT_TRUE(bop_constants(sigma, t.pow(p) - t));
    EXPECT_FALSE(bop_constants(sigma, t.pow(p)));
    // fractions of shift-invariant polynomials stay constant
    Poly w = t.pow(p) - t;
    EXPECT_TRUE(bop_constants(sigma, RatFunc(cst(k, 1), w * w + cst(k, 1))));
    EXPECT_FALSE(bop_constants(sigma, RatFunc(cst(k, 1), t)));
  }
}

TEST(Apply, DualNumbersGiveLeibniz) {
  std::mt19937_64 rng(check::seed_from_env(121));
  for (auto k : {FieldSpec::make(2, {"t"}), FieldSpec::make(3, {"s", "t"}), FieldSpec::make(5, {"t"})}) {
    std::vector<std::vector<Poly>> images;
    for (std::size_t i = 0; i < k.nvars(); ++i) images.push_back({check::random_poly(rng, k.p, k.nvars(), 2, 2)});
    BOperator op(AlgebraB::dual_numbers(k.p), k, images);
    auto classical = [&](const Poly& r) {
      Poly out(k.p, k.nvars());
      for (std::size_t i = 0; i < k.nvars(); ++i) out += r.partial(i) * images[i][0];
      return out;
    };
    for (int i = 0; i < 70; ++i) {
      Poly r = check::random_poly(rng, k.p, k.nvars(), 4, 4);
      Poly s = check::random_poly(rng, k.p, k.nvars(), 4, 4);
      auto rs = bop_apply(op, r * s);
      EXPECT_EQ(rs[0], r * s);
      EXPECT_EQ(rs[1], r * bop_apply(op, s)[1] + s * bop_apply(op, r)[1]);
      EXPECT_EQ(rs[1], classical(r * s));
    }
  }
}

TEST(Apply, ProductAlgebraGivesEndomorphism) {
  std::mt19937_64 rng(check::seed_from_env(122));
  for (auto k : {FieldSpec::make(2, {"t"}), FieldSpec::make(3, {"s", "t"}), FieldSpec::make(5, {"t"})}) {
    std::vector<std::vector<Poly>> images;
    std::vector<Poly> sigma_gens;
    for (std::size_t i = 0; i < k.nvars(); ++i) {
      images.push_back({check::random_poly(rng, k.p, k.nvars(), 2, 2)});
      sigma_gens.push_back(var(k, i) + images.back()[0]);
    }
    BOperator op(AlgebraB::product(k.p), k, images);
    auto sigma = [&](const Poly& r) {
      auto parts = bop_apply(op, r);
      return parts[0] + parts[1];
    };
    for (int i = 0; i < 70; ++i) {
      Poly r = check::random_poly(rng, k.p, k.nvars(), 3, 4);
      Poly s = check::random_poly(rng, k.p, k.nvars(), 3, 4);
      EXPECT_EQ(sigma(r * s), sigma(r) * sigma(s));
      EXPECT_EQ(sigma(r), check::substitute(r, sigma_gens));
    }
  }
}

TEST(Apply, HomomorphismIntoTensor) {
  // a three-dimensional local algebra k[e]/(e^3)
  auto b = AlgebraB::make(3, {"1", "e", "e2"},
                          {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                           {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                           {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}},
                          {1, 0, 0});
  ASSERT_TRUE(validate_algebra(b).ok);
  std::mt19937_64 rng(check::seed_from_env(123));
  auto k = FieldSpec::make(3, {"s", "t"});
  std::vector<std::vector<Poly>> images;
  for (std::size_t i = 0; i < 2; ++i)
    images.push_back({check::random_poly(rng, 3, 2, 2, 2), check::random_poly(rng, 3, 2, 2, 2)});
  BOperator op(b, k, images);
  for (int i = 0; i < 60; ++i) {
    Poly r = check::random_poly(rng, 3, 2, 3, 3);
    Poly s = check::random_poly(rng, 3, 2, 3, 3);
    auto lhs = bop_apply(op, r * s);
    auto rr = bop_apply(op, r), ss = bop_apply(op, s);
    // c^k_ij convolution written out by hand for e^i e^j = e^{i+j}
    for (std::size_t m = 0; m < 3; ++m) {
      Poly want(3, 2);
      for (std::size_t a = 0; a <= m; ++a) want += rr[a] * ss[m - a];
      EXPECT_EQ(lhs[m], want);
    }
    EXPECT_EQ(bop_apply(op, r + s)[2], rr[2] + ss[2]);
  }
}

TEST(Disjointness, ConstantsOfDualOperator) {
  // K = F_2(s, t) with d s = 0, d t = 1, L = K(x), x^2 = s, extended by d x = 0.
  // Then d(a + b x) = d a + (d b) x, so constants are read off coordinates.
  auto k = FieldSpec::make(2, {"s", "t"});
  BOperator op(AlgebraB::dual_numbers(2), k, {{cst(k, 0)}, {cst(k, 1)}});
  auto tower = Tower::make(k, {{"x", 1, RatFunc::generator(k, 0)}});
  auto is_constant = [&](const TowerElem& a) {
    for (const auto& c : base_coordinates(a))
      if (!bop_constants(op, c)) return false;
    return true;
  };
  SubfieldSpec constants{{1, 2}};
  auto x = TowerElem::generator(tower, 0);
  auto t = RatFunc::generator(k, 1);
  auto s = RatFunc::generator(k, 0);
  auto embed = [&](const RatFunc& c) { return TowerElem::from_base(tower, c); };

  std::vector<std::vector<TowerElem>> families = {
      {x, x.times(t * t)},
      {x, embed(s + t * t), x.times(s) + embed(t * t)},
      {embed(RatFunc::one(k)), x},
      {x.times(t * t + s), embed(s * s)},
  };
  for (const auto& family : families) {
    auto report = linear_disjointness_check(*tower, family, constants, is_constant);
    ASSERT_TRUE(report.all_constants);
    if (report.over_base.dependent) EXPECT_TRUE(report.over_subfield.dependent);
  }
  EXPECT_TRUE(linear_disjointness_check(*tower, families[0], constants, is_constant).over_subfield.dependent);
  EXPECT_FALSE(linear_disjointness_check(*tower, families[2], constants, is_constant).over_base.dependent);
  EXPECT_FALSE(is_constant(embed(t)));
}
