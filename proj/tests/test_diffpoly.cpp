#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "frobdiff/diffpoly.hpp"
#include "support.hpp"

using namespace frobdiff;

namespace {

struct Ctx {
  FrobDerivation d = check::f2_standard();
  FieldSpec k = d.field();
  RatFunc t = d.generator(0);
  DiffPoly X(std::size_t i = 0) const { return jet_variable(k, i); }
  DiffPoly C(const RatFunc& c) const { return DiffPoly::constant(c); }
  std::string str(const DiffPoly& f) const { return to_string(f, k); }
};

// Coefficient-and-variable q-th power of a differential polynomial.
DiffPoly qth(const FrobDerivation& d, const DiffPoly& f) { return f.frobenius(d.n(), d.p()); }

}  // namespace

TEST(Delta, KnownValues) {
  Ctx c;
  EXPECT_EQ(c.str(delta(c.d, c.C(c.t) * c.X())), "x^2 + t^2*x'");
  EXPECT_EQ(delta(c.d, c.X()), c.X(1));
  EXPECT_TRUE(delta(c.d, c.X() * c.X()).is_zero());
}

TEST(Evaluate, KnownValues) {
  Ctx c;
  auto f = c.X(1) + c.C(c.t) * c.X() * c.X();
  EXPECT_EQ(c.str(f), "t*x^2 + x'");
  EXPECT_EQ(to_string(evaluate_at(c.d, f, c.t), c.k), "t^3 + 1");
  EXPECT_EQ(evaluate_at(c.d, c.X(), c.t + c.d.one()), c.t + c.d.one());
  EXPECT_EQ(evaluate_at(c.d, c.C(c.t), c.d.one()), c.t);
  std::vector<RatFunc> short_jets{c.t};
  EXPECT_THROW(evaluate(c.d, f, std::span<const RatFunc>(short_jets)), Error);
}

TEST(Order, KnownValues) {
  Ctx c;
  EXPECT_EQ(order(c.X(2) + c.C(c.t) * c.X()), 2);
  EXPECT_EQ(order(c.C(c.t)), -1);
  EXPECT_EQ(order(c.X().pow(5, c.d.one())), 0);
  EXPECT_THROW(order(DiffPoly()), Error);
  EXPECT_EQ(leader_degree(c.X(1).pow(3, c.d.one()) + c.X(1)), 3u);
}

TEST(Separant, KnownValues) {
  Ctx c;
  auto one = c.d.one();
  EXPECT_EQ(c.str(separant(c.X(1).pow(2, one) + c.C(c.t) * c.X(1) + c.X())), "t");
  EXPECT_TRUE(separant(c.X(1).pow(2, one)).is_zero());
  EXPECT_EQ(separant(c.X(1)), c.C(one));
  EXPECT_THROW(separant(c.C(c.t)), Error);
  EXPECT_THROW(separant(DiffPoly()), Error);
}

TEST(CoeffDerive, KnownValues) {
  Ctx c;
  auto f = c.C(c.t) * c.X() + c.C(c.t * c.t);
  EXPECT_EQ(coeff_derive(c.d, f), c.X());
  EXPECT_TRUE(coeff_derive(c.d, c.X().pow(3, c.d.one())).is_zero());
  EXPECT_EQ(c.str(coeff_derive(c.d, c.C(c.t.pow(3)))), "t^4");
}

TEST(TotalDerivative, KnownValues) {
  Ctx c;
  auto f = c.X(0) * c.X(1);
  std::vector<RatFunc> pt{c.t, c.t + c.d.one()};
  auto [lhs, rhs] = total_derivative_check(c.d, c.d, f, std::span<const RatFunc>(pt));
  EXPECT_EQ(lhs, c.d.one());
  EXPECT_EQ(rhs, c.d.one());
}

TEST(DiffPolyProperties, Leibniz) {
  std::mt19937_64 rng(check::seed_from_env(31));
  for (auto k : {FieldSpec::make(2, {"t"}), FieldSpec::make(3, {"t"})}) {
    auto d = check::random_derivation(rng, k, 1);
    for (int i = 0; i < 40; ++i) {
      auto f = check::random_diffpoly(rng, k, 2, 2, 3);
      auto g = check::random_diffpoly(rng, k, 2, 2, 3);
      EXPECT_EQ(delta(d, f * g), qth(d, f) * delta(d, g) + qth(d, g) * delta(d, f));
    }
  }
}

TEST(DiffPolyProperties, CommutesWithEvaluation) {
  std::mt19937_64 rng(check::seed_from_env(32));
  for (auto k : {FieldSpec::make(2, {"t"}), FieldSpec::make(3, {"s", "t"})}) {
    auto d = check::random_derivation(rng, k, 1);
    for (int i = 0; i < 40; ++i) {
      auto f = check::random_diffpoly(rng, k, 2, 2, 3);
      auto a = check::random_ratfunc(rng, k, 1, 2);
      EXPECT_EQ(evaluate_at(d, delta(d, f), a), d.derive(evaluate_at(d, f, a)));
    }
  }
}

TEST(DiffPolyProperties, CommutesWithEvaluationInTower) {
  std::mt19937_64 rng(check::seed_from_env(33));
  auto ex = check::ExampleTower::make();
  for (int i = 0; i < 15; ++i) {
    auto f = check::random_diffpoly(rng, ex.base, 1, 2, 2);
    auto a = ex.x().times(check::random_polynomial_elem(rng, ex.base, 1, 2)) + ex.lam();
    EXPECT_EQ(evaluate_at(ex.d, delta(ex.base_d, f), a), ex.d.derive(evaluate_at(ex.d, f, a)));
  }
}

TEST(DiffPolyProperties, OrderGrowsByOne) {
  std::mt19937_64 rng(check::seed_from_env(34));
  auto d = check::f2_standard();
  for (int i = 0; i < 50; ++i) {
    auto f = check::random_diffpoly(rng, d.field(), 2, 3, 3);
    if (f.is_constant()) continue;
    int m = order(f);
    // build instances whose top jet occurs linearly, so it is not a p-th power
    f += jet_variable(d.field(), static_cast<std::size_t>(m));
    if (f.degree_in(static_cast<std::size_t>(m)) != 1) continue;
    EXPECT_EQ(order(delta(d, f)), m + 1);
  }
}

TEST(DiffPolyProperties, TotalDerivativeAgrees) {
  std::mt19937_64 rng(check::seed_from_env(35));
  auto k = FieldSpec::make(3, {"t"});
  auto d = check::random_derivation(rng, k, 1);
  for (int i = 0; i < 40; ++i) {
    auto f = check::random_diffpoly(rng, k, 2, 3, 3);
    std::vector<RatFunc> pt;
    for (int j = 0; j < 3; ++j) pt.push_back(check::random_ratfunc(rng, k, 1, 2));
    auto [lhs, rhs] = total_derivative_check(d, d, f, std::span<const RatFunc>(pt));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Printing, JetNames) {
  EXPECT_EQ(jet_name(0), "x");
  EXPECT_EQ(jet_name(1), "x'");
  EXPECT_EQ(jet_name(2), "x''");
  EXPECT_EQ(jet_name(3), "x^(3)");
}
