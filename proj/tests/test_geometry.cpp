#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "frobdiff/geometry.hpp"
#include "frobdiff/search.hpp"
#include "support.hpp"

using namespace frobdiff;

namespace {

struct Ctx {
  FrobDerivation d = check::f2_st();
  FieldSpec k = d.field();
  RatFunc s = d.generator(0);
  RatFunc t = d.generator(1);
  RatFunc one = d.one();
  KPoly X(std::size_t i = 0) const { return KPoly::variable(i, one); }
  KPoly C(const RatFunc& c) const { return KPoly::constant(c); }
};

}  // namespace

TEST(TwistDerive, KnownValues) {
  Ctx c;
  EXPECT_TRUE(twist_derive_poly(c.d, c.X() * c.X() + c.C(c.s), 1).is_zero());
  EXPECT_EQ(twist_derive_poly(c.d, c.X() + c.C(c.t), 1), c.X(1) + c.C(c.one));
  EXPECT_TRUE(twist_derive_poly(c.d, c.X().pow(2, c.one), 1).is_zero());
}

TEST(Prolong, KnownValues) {
  Ctx c;
  auto p1 = prolong(IdealGens::make({"X"}, {c.X() + c.C(c.t)}), c.d);
  ASSERT_EQ(p1.ideal.gens.size(), 2u);
  EXPECT_EQ(to_string(p1.ideal, c.k), "X + t, X' + 1");
  auto p2 = prolong(IdealGens::make({"X"}, {c.X() * c.X() + c.C(c.s)}), c.d);
  EXPECT_TRUE(p2.ideal.gens[1].is_zero());
  auto p3 = prolong(IdealGens::make({"X"}, {c.X()}), c.d);
  EXPECT_EQ(to_string(p3.ideal, c.k), "X, X'");
  EXPECT_THROW(IdealGens::make({"X"}, {}), Error);
  EXPECT_THROW(IdealGens::make({"X"}, {c.X(1)}), Error);
}

TEST(Section, KnownValues) {
  Ctx c;
  auto w = prolong(IdealGens::make({"X"}, {c.X() + c.C(c.t)}), c.d).ideal;
  std::vector<RatFunc> a{c.t};
  EXPECT_TRUE(check_section(c.d, w, std::span<const RatFunc>(a)));
  std::vector<RatFunc> jets{c.one};
  EXPECT_TRUE(check_section(c.d, w, std::span<const RatFunc>(a), std::span<const RatFunc>(jets)));
  auto unit = IdealGens::make({"X", "X'"}, {c.C(c.one)});
  EXPECT_FALSE(check_section(c.d, unit, std::span<const RatFunc>(a)));
  std::vector<RatFunc> none;
  EXPECT_THROW(check_section(c.d, w, std::span<const RatFunc>(none)), Error);
}

TEST(Section, CounterexampleHasNoPointOfLowDegree) {
  Ctx c;
  auto w = IdealGens::make({"X", "X'"}, {c.X() * c.X() + c.C(c.s), c.X(1)});
  SearchConfig cfg;
  cfg.max_degree = 4;
  CandidateEnumerator en(c.k, cfg);
  std::uint64_t count = 0;
  while (auto a = en.next()) {
    std::vector<RatFunc> pt{*a};
    ASSERT_FALSE(check_section(c.d, w, std::span<const RatFunc>(pt)));
    ++count;
  }
  EXPECT_EQ(count, 1u << 15);
}

TEST(Section, CounterexampleHasPointInTower) {
  // s has a square root in L = K(r), r^2 = s; the point (r, 0) lies on W
  Ctx c;
  auto tw = Tower::make(c.k, {{"r", 1, c.s}});
  TowerDerivation td(tw, c.d, {TowerElem(tw)});
  auto w = IdealGens::make({"X", "X'"}, {c.X() * c.X() + c.C(c.s), c.X(1)});
  std::vector<TowerElem> pt{td.generator(0)};
  EXPECT_TRUE(check_section(td, w, std::span<const TowerElem>(pt)));
}

TEST(Section, GeneratedHypersurfacesThroughPoints) {
  std::mt19937_64 rng(check::seed_from_env(41));
  for (auto k : {FieldSpec::make(2, {"t"}), FieldSpec::make(3, {"s", "t"})}) {
    auto d = check::random_derivation(rng, k, 1);
    for (int i = 0; i < 25; ++i) {
      const std::size_t m = 1 + i % 2;
      std::vector<RatFunc> a;
      for (std::size_t j = 0; j < m; ++j) a.push_back(check::random_ratfunc(rng, k, 1, 2));
      KPoly g;
      for (int term = 0; term < 3; ++term) {
        Exponents e(m, 0);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 3);
        g.add_term(e, check::random_nonzero_ratfunc(rng, k, 1, 2));
      }
      KPoly f = g - KPoly::constant(evaluate_kpoly(d, g, std::span<const RatFunc>(a)));
      if (f.is_zero()) continue;
      std::vector<std::string> names;
      for (std::size_t j = 0; j < m; ++j) names.push_back("X" + std::to_string(j + 1));
      auto w = prolong(IdealGens::make(names, {f}), d).ideal;
      EXPECT_TRUE(check_section(d, w, std::span<const RatFunc>(a)));
    }
  }
}

TEST(TwistDerive, Additive) {
  std::mt19937_64 rng(check::seed_from_env(42));
  auto k = FieldSpec::make(3, {"t"});
  auto d = check::random_derivation(rng, k, 1);
  for (int i = 0; i < 30; ++i) {
    auto f = check::random_diffpoly(rng, k, 1, 3, 3);
    auto g = check::random_diffpoly(rng, k, 1, 3, 3);
    EXPECT_EQ(twist_derive_poly(d, f + g, 2), twist_derive_poly(d, f, 2) + twist_derive_poly(d, g, 2));
  }
}

TEST(TwistDerive, ClassicalDegeneration) {
  // With coefficient derivative zero and q = 1 the formula is the usual
  // differential: compare with the Jacobian computed by hand.
  Ctx c;
  auto f = c.X(0) * c.X(0) * c.X(1) + c.C(c.t) * c.X(1);
  auto expected = c.C(c.t) * c.X(3) + c.X(0) * c.X(0) * c.X(3);  // 2 X1 X2 X1' vanishes in char 2
  EXPECT_EQ(classical_tangent_poly(f, 2), expected);
  auto k3 = FieldSpec::make(3, {"t"});
  KPoly y = KPoly::variable(0, RatFunc::one(k3));
  EXPECT_EQ(classical_tangent_poly(y * y, 1), (y * KPoly::variable(1, RatFunc::one(k3))).scaled(2));
}

TEST(Search, EnumerationOrder) {
  auto k = FieldSpec::make(2, {"t"});
  CandidateEnumerator en(k, SearchConfig{});
  std::vector<std::string> seen;
  for (int i = 0; i < 6; ++i) seen.push_back(to_string(*en.next(), k));
  EXPECT_EQ(seen, (std::vector<std::string>{"0", "1", "t", "t + 1", "t^2", "t^2 + 1"}));
}

TEST(Search, CapAndFractions) {
  auto k = FieldSpec::make(2, {"t"});
  SearchConfig cfg{1, false, 3};
  CandidateEnumerator en(k, cfg);
  for (int i = 0; i < 3; ++i) en.next();
  EXPECT_THROW(en.next(), Error);
  SearchConfig frac{1, true, 100};
  CandidateEnumerator ef(k, frac);
  std::vector<std::string> seen;
  while (auto c = ef.next()) seen.push_back(to_string(*c, k));
  EXPECT_EQ(seen, (std::vector<std::string>{"0", "1", "t", "t + 1", "1/t", "(t + 1)/t", "1/(t + 1)",
                                            "t/(t + 1)"}));
}
