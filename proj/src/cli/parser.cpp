#include <cctype>

#include "frobdiff/cli.hpp"

namespace frobdiff::cli {

ExprPtr Expr::num(std::uint64_t v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Num;
  e->value = v;
  return e;
}

ExprPtr Expr::var(std::string name, unsigned primes) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Name;
  e->name = std::move(name);
  e->primes = primes;
  return e;
}

ExprPtr Expr::jet(std::uint64_t order) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Jet;
  e->value = order;
  return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = {std::move(a), std::move(b)};
  return e;
}

ExprPtr Expr::unary(Kind kind, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = {std::move(a)};
  return e;
}

ExprPtr Expr::pow(ExprPtr base, std::uint64_t n) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->value = n;
  e->args = {std::move(base)};
  return e;
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.primes != b.primes) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  return true;
}

bool contains(const Expr& e, Expr::Kind kind) {
  if (e.kind == kind) return true;
  for (const auto& a : e.args)
    if (contains(*a, kind)) return true;
  return false;
}

bool same_tree(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Formula::Kind::Compare)
    return a.equal == b.equal && same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_tree(a.children[i], b.children[i])) return false;
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr whole_expr() {
    auto e = expr();
    finish();
    return e;
  }

  Formula whole_formula() {
    auto f = disjunction();
    finish();
    return f;
  }

 private:
  using Kind = Expr::Kind;

  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw SyntaxError(pos_, what + ", found end of input");
    throw SyntaxError(pos_, what + ", found '" + std::string(1, text_[pos_]) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void finish() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  std::uint64_t nat() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      unsigned digit = static_cast<unsigned>(text_[pos_] - '0');
      if (v > (UINT64_MAX - digit) / 10) throw SyntaxError(start, "number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  unsigned primes() {
    unsigned n = 0;
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++pos_;
      ++n;
    }
    return n;
  }

  bool next_is(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  ExprPtr expr() {
    auto e = term();
    while (true) {
      if (accept('+')) {
        e = Expr::binary(Kind::Add, e, term());
      } else if (peek() == '-') {
        ++pos_;
        e = Expr::binary(Kind::Sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    auto e = factor();
    while (true) {
      if (accept('*')) {
        e = Expr::binary(Kind::Mul, e, factor());
      } else if (accept('/')) {
        e = Expr::binary(Kind::Div, e, factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    auto e = atom();
    if (accept('^')) e = Expr::pow(e, nat());
    return e;
  }

  ExprPtr atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::num(nat());
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected an operand");
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word == "x") {
      if (next_is("^(")) {
        pos_ += 2;
        auto k = nat();
        expect(')');
        return Expr::jet(k);
      }
      return Expr::jet(primes());
    }
    if ((word == "d" || word == "l0") && next_is("(")) {
      ++pos_;
      auto inner = expr();
      expect(')');
      return Expr::unary(word == "d" ? Kind::Derive : Kind::Lambda0, inner);
    }
    return Expr::var(std::move(word), primes());
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (accept('|')) parts.push_back(conjunction());
    if (parts.size() == 1) return std::move(parts[0]);
    Formula f;
    f.kind = Formula::Kind::Or;
    f.children = std::move(parts);
    return f;
  }

  Formula conjunction() {
    std::vector<Formula> parts{comparison()};
    while (accept('&')) parts.push_back(comparison());
    if (parts.size() == 1) return std::move(parts[0]);
    Formula f;
    f.kind = Formula::Kind::And;
    f.children = std::move(parts);
    return f;
  }

  Formula comparison() {
    std::size_t start = pos_;
    if (peek() == '(') {
      // either a parenthesized term or a parenthesized formula
      try {
        return compare_tail(expr());
      } catch (const SyntaxError& first) {
        std::size_t reached = first.offset();
        pos_ = start;
        expect('(');
        try {
          auto f = disjunction();
          expect(')');
          return f;
        } catch (const SyntaxError& second) {
          if (second.offset() >= reached) throw;
          throw first;
        }
      }
    }
    return compare_tail(expr());
  }

  Formula compare_tail(ExprPtr lhs) {
    Formula f;
    f.lhs = std::move(lhs);
    if (accept('=')) {
      f.equal = true;
    } else if (next_is("!=")) {
      pos_ += 2;
      f.equal = false;
    } else {
      fail("expected '=' or '!='");
    }
    f.rhs = expr();
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string wrapped(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).whole_expr(); }

Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }

std::string print(const Expr& e) {
  using Kind = Expr::Kind;
  switch (e.kind) {
    case Kind::Num:
      return std::to_string(e.value);
    case Kind::Name:
      return e.name + std::string(e.primes, '\'');
    case Kind::Jet:
      return e.value <= 2 ? "x" + std::string(e.value, '\'') : "x^(" + std::to_string(e.value) + ")";
    case Kind::Derive:
      return "d(" + print(*e.args[0]) + ")";
    case Kind::Lambda0:
      return "l0(" + print(*e.args[0]) + ")";
    case Kind::Pow:
      return wrapped(*e.args[0], precedence(*e.args[0]) < 4) + "^" + std::to_string(e.value);
    default:
      break;
  }
  static const std::map<Kind, std::string> ops = {
      {Kind::Add, " + "}, {Kind::Sub, " - "}, {Kind::Mul, "*"}, {Kind::Div, "/"}};
  int p = precedence(e);
  return wrapped(*e.args[0], precedence(*e.args[0]) < p) + ops.at(e.kind) +
         wrapped(*e.args[1], precedence(*e.args[1]) <= p);
}

std::string print(const Formula& f) {
  if (f.kind == Formula::Kind::Compare) return print(*f.lhs) + (f.equal ? " = " : " != ") + print(*f.rhs);
  const bool is_and = f.kind == Formula::Kind::And;
  std::string out;
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    const auto& c = f.children[i];
    if (i) out += is_and ? " & " : " | ";
    bool parens = c.kind == Formula::Kind::Or || (is_and && c.kind == Formula::Kind::And);
    out += parens ? "(" + print(c) + ")" : print(c);
  }
  return out;
}

}  // namespace frobdiff::cli
