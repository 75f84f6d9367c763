#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "frobdiff/cli.hpp"
#include "cli_support.hpp"
#include "support.hpp"

using namespace frobdiff;
using namespace frobdiff::cli;
using namespace frobdiff::check;
namespace fs = std::filesystem;

namespace {

using Kind = Expr::Kind;

std::size_t syntax_offset(const std::function<void()>& f) {
  try {
    f();
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no syntax error";
  return SIZE_MAX;
}

class GoldenDir : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = fs::current_path();
    fs::current_path(GOLDEN_DIR);
  }
  void TearDown() override { fs::current_path(saved_); }

 private:
  fs::path saved_;
};

}  // namespace

TEST(Parse, KnownValues) {
  auto e = parse_expr("t^2 + 1");
  ASSERT_EQ(e->kind, Kind::Add);
  EXPECT_TRUE(same_tree(*e, *Expr::binary(Kind::Add, Expr::pow(Expr::var("t"), 2), Expr::num(1))));

  e = parse_expr("x'' + t*x^2");
  EXPECT_TRUE(same_tree(
      *e, *Expr::binary(Kind::Add, Expr::jet(2), Expr::binary(Kind::Mul, Expr::var("t"), Expr::pow(Expr::jet(0), 2)))));

  e = parse_expr("l0(t^2)");
  EXPECT_TRUE(same_tree(*e, *Expr::unary(Kind::Lambda0, Expr::pow(Expr::var("t"), 2))));

  EXPECT_TRUE(same_tree(*parse_expr("x^(3)"), *Expr::jet(3)));
  EXPECT_TRUE(same_tree(*parse_expr("x^3"), *Expr::pow(Expr::jet(0), 3)));
  EXPECT_TRUE(same_tree(*parse_expr("a - b - c"),
                        *Expr::binary(Kind::Sub, Expr::binary(Kind::Sub, Expr::var("a"), Expr::var("b")),
                                      Expr::var("c"))));
  EXPECT_TRUE(same_tree(*parse_expr("d*(t)"), *Expr::binary(Kind::Mul, Expr::var("d"), Expr::var("t"))));
  EXPECT_EQ(print(*parse_expr("(t)*((s))")), "t*s");
  EXPECT_EQ(print(*parse_expr("a/(b*c)")), "a/(b*c)");
  EXPECT_EQ(print(*parse_expr("(a^2)^3")), "(a^2)^3");
  EXPECT_EQ(print(*parse_expr("X'  +   x^(1)")), "X' + x'");
}

TEST(Parse, SyntaxErrorOffsets) {
  EXPECT_EQ(syntax_offset([] { parse_expr("t + "); }), 4u);
  EXPECT_EQ(syntax_offset([] { parse_expr("t^(3"); }), 2u);
  EXPECT_EQ(syntax_offset([] { parse_expr("(t"); }), 2u);
  EXPECT_EQ(syntax_offset([] { parse_expr("t $"); }), 2u);
  EXPECT_EQ(syntax_offset([] { parse_expr("x^(k)"); }), 3u);
  EXPECT_EQ(syntax_offset([] { parse_expr("t^-1"); }), 2u);
  EXPECT_EQ(syntax_offset([] { parse_formula("x = 0 & "); }), 8u);
  EXPECT_EQ(syntax_offset([] { parse_formula("(x + 1) & x = 0"); }), 8u);
  EXPECT_EQ(syntax_offset([] { parse_formula("x"); }), 1u);
  // the offset is a byte offset, so a multi-byte character counts fully
  EXPECT_EQ(syntax_offset([] { parse_expr("t + \xce\xbb"); }), 4u);
}

TEST(Parse, Formulas) {
  auto f = parse_formula("l0(x) = t | x' != 0 & x = 1");
  ASSERT_EQ(f.kind, Formula::Kind::Or);
  ASSERT_EQ(f.children.size(), 2u);
  EXPECT_EQ(f.children[1].kind, Formula::Kind::And);
  EXPECT_EQ(print(f), "l0(x) = t | x' != 0 & x = 1");

  auto g = parse_formula("((x = 0 | x = 1)) & (x) != t");
  ASSERT_EQ(g.kind, Formula::Kind::And);
  EXPECT_EQ(g.children[0].kind, Formula::Kind::Or);
  EXPECT_EQ(print(g), "(x = 0 | x = 1) & x != t");
}

TEST(Parse, RoundTripOnGeneratedExpressions) {
  std::mt19937_64 rng(check::seed_from_env(141));
  for (int i = 0; i < 500; ++i) {
    auto e = random_expr(rng, 4);
    std::string text = print(*e);
    auto back = parse_expr(text);
    ASSERT_TRUE(same_tree(*e, *back)) << text;
    EXPECT_EQ(print(*back), text);
  }
  for (int i = 0; i < 100; ++i) {
    auto f = random_formula(rng, 3);
    std::string text = print(f);
    auto back = parse_formula(text);
    ASSERT_TRUE(same_tree(f, back)) << text;
    EXPECT_EQ(print(back), text);
  }
}

TEST(Session, ParsesSections) {
  auto s = parse_session(
      "[field]\np = 3\ngenerators = s, t\nd(t) = t\n\n[bind]\nf = x' + s  # comment\n"
      "[algebra]\nbasis = 1, e\ne*e = 0\ne(t) = 1\n");
  EXPECT_EQ(s.field.p, 3u);
  EXPECT_EQ(s.field.generators, (std::vector<std::string>{"s", "t"}));
  EXPECT_EQ(to_string(s.d->images()[1], s.field), "t");
  EXPECT_TRUE(s.d->images()[0].is_zero());
  ASSERT_TRUE(s.bindings.count("f"));
  EXPECT_EQ(print(*s.bindings["f"]), "x' + s");
  ASSERT_TRUE(s.bop.has_value());
  EXPECT_EQ(s.bop->algebra().dim(), 2u);

  auto n2 = parse_session("[field]\np = 2\n", 2u);
  EXPECT_EQ(n2.d->n(), 2u);
}

TEST(Session, Errors) {
  std::string text = "[field]\np = 2\n[bind]\nf = t +\n";
  EXPECT_EQ(syntax_offset([&] { parse_session(text); }), text.size() - 1);
  EXPECT_EQ(syntax_offset([] { parse_session("[nope]\n"); }), 0u);
  EXPECT_EQ(syntax_offset([] { parse_session("p = 2\n"); }), 0u);
  EXPECT_EQ(syntax_offset([] { parse_session("[field]\ngenerators = x\n"); }), 21u);
  EXPECT_EQ(syntax_offset([] { parse_session("[field]\np = two\n"); }), 12u);
  try {
    parse_session("[field]\np = 4\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidField);
  }
  try {
    parse_session("[field]\np = 2\ngenerators = X\n[tower]\nx = X\ny = X\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BasisViolation);
  }
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_cli({"derive", "t^3"}).status, 0);
  EXPECT_EQ(run_cli({"derive", "t^3"}).out, "t^4\n");
  EXPECT_EQ(run_cli({"derive", "1/(t^2 - t^2)"}).status, 1);
  EXPECT_EQ(run_cli({"eliminate", "x' + x", "x' + x"}).status, 1);
  EXPECT_EQ(run_cli({"derive", "t +"}).status, 2);
  EXPECT_EQ(run_cli({"derive", "u"}).status, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).status, 2);
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"--session", "/nonexistent/file", "derive", "t"}).status, 2);
  EXPECT_EQ(run_cli({"--n", "2", "derive", "t^3"}).out, "t^8\n");

  auto e = run_cli({"--json", "derive", "1/(t + t)"});
  EXPECT_EQ(e.status, 1);
  EXPECT_EQ(e.out.rfind("{\"status\":\"error\"", 0), 0u) << e.out;
  EXPECT_TRUE(e.err.empty());
}

TEST(Run, CommandExamples) {
  EXPECT_EQ(run_cli({"order", "x'' + x"}).out, "2\n");
  auto r = run_cli({"eliminate", "x'^2 + t", "x' + x"});
  EXPECT_EQ(r.out, "p = 1\nq = x' + x\ngtilde = x^2 + t\n");
  EXPECT_EQ(run_cli({"--p", "3", "derive", "t^3"}).out, "0\n");
}

TEST_F(GoldenDir, TranscriptsAreByteIdentical) {
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator("."))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  ASSERT_EQ(cases.size(), 25u);
  const bool regen = std::getenv("FROBDIFF_REGEN") != nullptr;
  for (const auto& c : cases) {
    std::vector<std::string> args;
    std::istringstream in(slurp(c));
    for (std::string line; std::getline(in, line);) args.push_back(line);
    std::string first = transcript(args);
    EXPECT_EQ(first, transcript(args)) << c;
    fs::path expected = fs::path(c).replace_extension(".out");
    if (regen) {
      std::ofstream(expected, std::ios::binary) << first;
      continue;
    }
    ASSERT_TRUE(fs::exists(expected)) << expected;
    EXPECT_EQ(first, slurp(expected)) << c;
  }
}
