#include "eval.hpp"

#include <optional>

namespace frobdiff::cli {

namespace {

[[noreturn]] void shape(const std::string& msg) { throw Error(ErrorCode::ShapeViolation, msg); }

RatFunc field_constant(const FieldSpec& f, std::uint64_t v) {
  return RatFunc::constant(f, static_cast<std::int64_t>(v % f.p));
}

}  // namespace

struct FieldMode {
  using Value = RatFunc;
  const Session& s;

  std::optional<Value> variable(const Expr&) const { return std::nullopt; }
  Value number(std::uint64_t v) const { return field_constant(s.field, v); }
  Value embed(const RatFunc& c) const { return c; }
  Value jet(const Expr&) const { shape("jets only make sense in differential polynomials"); }
  Value divide(const Value& a, const Value& b) const { return a / b; }
  Value power(const Value& a, std::uint64_t e) const { return a.pow(static_cast<std::int64_t>(e)); }
  Value derive(const Value& a) const {
    if (!s.d) shape("d(.) is not available while the derivation is being defined");
    return s.d->derive(a);
  }
  Value lambda0(const Value& a) const { return frobdiff::lambda0(a); }
};

struct DiffMode {
  using Value = DiffPoly;
  const Session& s;

  std::optional<Value> variable(const Expr&) const { return std::nullopt; }
  Value number(std::uint64_t v) const { return DiffPoly::constant(field_constant(s.field, v)); }
  Value embed(const RatFunc& c) const { return DiffPoly::constant(c); }
  Value jet(const Expr& e) const { return jet_variable(s.field, e.value); }
  Value divide(const Value& a, const Value& b) const {
    if (!b.is_constant()) shape("division by a non-constant differential polynomial");
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return a.times(b.constant_coefficient()->inverse());
  }
  Value power(const Value& a, std::uint64_t e) const { return a.pow(e, RatFunc::one(s.field)); }
  Value derive(const Value& a) const { return delta(*s.d, a); }
  Value lambda0(const Value& a) const {
    if (!a.is_constant()) shape("l0 of a non-constant differential polynomial; use rewrite-l0");
    auto c = a.constant_coefficient();
    return c ? DiffPoly::constant(frobdiff::lambda0(*c)) : a;
  }
};

struct TowerMode {
  using Value = TowerElem;
  const Session& s;

  std::optional<Value> generator(const std::string& name) const {
    if (auto j = s.tower->index_of(name)) return TowerElem::generator(s.tower, *j);
    return std::nullopt;
  }
  std::optional<Value> variable(const Expr& e) const {
    if (e.primes) return std::nullopt;
    return generator(e.name);
  }
  Value number(std::uint64_t v) const { return embed(field_constant(s.field, v)); }
  Value embed(const RatFunc& c) const { return TowerElem::from_base(s.tower, c); }
  Value jet(const Expr& e) const {
    // a tower generator may be called x; only the plain spelling refers to it
    if (e.value == 0)
      if (auto g = generator("x")) return *g;
    shape("jets only make sense in differential polynomials");
  }
  Value divide(const Value& a, const Value& b) const { return a / b; }
  Value power(const Value& a, std::uint64_t e) const { return a.pow(e); }
  Value derive(const Value& a) const {
    if (!s.tower_d) shape("d(.) is not available while the tower is being defined");
    return s.tower_d->derive(a);
  }
  Value lambda0(const Value&) const { shape("l0 is only available on the base field"); }
};

struct KPolyMode {
  using Value = KPoly;
  const Session& s;
  const std::vector<std::string>& vars;

  std::optional<Value> variable(const Expr& e) const {
    std::string full = e.name + std::string(e.primes, '\'');
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == full) return KPoly::variable(i, RatFunc::one(s.field));
    return std::nullopt;
  }
  Value number(std::uint64_t v) const { return KPoly::constant(field_constant(s.field, v)); }
  Value embed(const RatFunc& c) const { return KPoly::constant(c); }
  Value jet(const Expr& e) const {
    if (e.value == 0)
      if (auto v = variable(*Expr::var("x"))) return *v;
    shape("jets are not variables of this polynomial ring");
  }
  Value divide(const Value& a, const Value& b) const { return DiffMode{s}.divide(a, b); }
  Value power(const Value& a, std::uint64_t e) const { return a.pow(e, RatFunc::one(s.field)); }
  Value derive(const Value& a) const {
    if (!a.is_constant()) shape("d(.) applies to constants only here");
    auto c = a.constant_coefficient();
    return c ? KPoly::constant(s.d->derive(*c)) : a;
  }
  Value lambda0(const Value& a) const { return DiffMode{s}.lambda0(a); }
};

struct TermMode {
  using Value = TermPtr;
  const Session& s;

  std::optional<Value> variable(const Expr&) const { return std::nullopt; }
  Value number(std::uint64_t v) const { return Term::make_const(field_constant(s.field, v)); }
  Value embed(const RatFunc& c) const { return Term::make_const(c); }
  Value jet(const Expr& e) const { return Term::make_jet(e.value); }
  // jet-free subterms are folded so that l0 of a constant never reaches the rewriter
  static bool is_const(const Value& a) { return a->kind == Term::Kind::Const; }
  Value divide(const Value& a, const Value& b) const {
    if (!is_const(b)) shape("division by a non-constant term");
    if (is_const(a)) return Term::make_const(a->value / b->value);
    return Term::make(Term::Kind::Mul, {a, Term::make_const(b->value.inverse())});
  }
  Value power(const Value& a, std::uint64_t e) const {
    if (is_const(a)) return Term::make_const(a->value.pow(static_cast<std::int64_t>(e)));
    return Term::make_pow(a, e);
  }
  Value derive(const Value& a) const {
    if (is_const(a)) return Term::make_const(s.d->derive(a->value));
    return Term::make(Term::Kind::Derive, {a});
  }
  Value lambda0(const Value& a) const {
    if (is_const(a)) return Term::make_const(frobdiff::lambda0(a->value));
    return Term::make(Term::Kind::Lambda0, {a});
  }
};

namespace {

template <class V>
V add(const V& a, const V& b) {
  return a + b;
}
bool both_const(const TermPtr& a, const TermPtr& b) {
  return a->kind == Term::Kind::Const && b->kind == Term::Kind::Const;
}
TermPtr add(const TermPtr& a, const TermPtr& b) {
  if (both_const(a, b)) return Term::make_const(a->value + b->value);
  return Term::make(Term::Kind::Add, {a, b});
}
template <class V>
V sub(const V& a, const V& b) {
  return a - b;
}
TermPtr sub(const TermPtr& a, const TermPtr& b) {
  if (both_const(a, b)) return Term::make_const(a->value - b->value);
  return Term::make(Term::Kind::Sub, {a, b});
}
template <class V>
V mul(const V& a, const V& b) {
  return a * b;
}
TermPtr mul(const TermPtr& a, const TermPtr& b) {
  if (both_const(a, b)) return Term::make_const(a->value * b->value);
  return Term::make(Term::Kind::Mul, {a, b});
}

}  // namespace

template <class Mode>
typename Mode::Value Evaluator::name(const Expr& e, const Mode& m) const {
  if (auto v = m.variable(e)) return *v;
  if (e.primes == 0) {
    if (auto i = s_.field.index_of(e.name)) return m.embed(RatFunc::generator(s_.field, *i));
    if (auto it = s_.bindings.find(e.name); it != s_.bindings.end()) {
      if (!active_.insert(e.name).second)
        throw Error(ErrorCode::UsageError, "binding " + e.name + " refers to itself");
      try {
        auto v = eval(*it->second, m);
        active_.erase(e.name);
        return v;
      } catch (...) {
        active_.erase(e.name);
        throw;
      }
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown name " + e.name + std::string(e.primes, '\''));
}

template <class Mode>
typename Mode::Value Evaluator::eval(const Expr& e, const Mode& m) const {
  using Kind = Expr::Kind;
  switch (e.kind) {
    case Kind::Num:
      return m.number(e.value);
    case Kind::Name:
      return name(e, m);
    case Kind::Jet:
      return m.jet(e);
    case Kind::Add:
      return add(eval(*e.args[0], m), eval(*e.args[1], m));
    case Kind::Sub:
      return sub(eval(*e.args[0], m), eval(*e.args[1], m));
    case Kind::Mul:
      return mul(eval(*e.args[0], m), eval(*e.args[1], m));
    case Kind::Div:
      return m.divide(eval(*e.args[0], m), eval(*e.args[1], m));
    case Kind::Pow:
      return m.power(eval(*e.args[0], m), e.value);
    case Kind::Derive:
      return m.derive(eval(*e.args[0], m));
    case Kind::Lambda0:
      return m.lambda0(eval(*e.args[0], m));
  }
  shape("unreachable expression kind");
}

RatFunc Evaluator::field(const Expr& e) const { return eval(e, FieldMode{s_}); }

DiffPoly Evaluator::diffpoly(const Expr& e) const {
  if (!s_.d) shape("differential polynomials need a derivation");
  return eval(e, DiffMode{s_});
}

TowerElem Evaluator::tower(const Expr& e) const {
  if (!s_.tower) throw Error(ErrorCode::UsageError, "the session has no [tower] section");
  return eval(e, TowerMode{s_});
}

KPoly Evaluator::kpoly(const Expr& e, const std::vector<std::string>& vars) const {
  return eval(e, KPolyMode{s_, vars});
}

TermPtr Evaluator::term(const Expr& e) const {
  if (!s_.d) shape("formulas need a derivation");
  return eval(e, TermMode{s_});
}

Lambda0Formula Evaluator::formula(const Formula& f) const {
  if (f.kind == Formula::Kind::Compare) return Lambda0Formula::make_atom(term(*f.lhs), term(*f.rhs), f.equal);
  std::vector<Lambda0Formula> parts;
  for (const auto& c : f.children) parts.push_back(formula(c));
  return f.kind == Formula::Kind::And ? Lambda0Formula::make_and(std::move(parts))
                                      : Lambda0Formula::make_or(std::move(parts));
}

Poly Evaluator::polynomial(const Expr& e) const {
  RatFunc r = field(e);
  if (!r.is_polynomial()) shape(print(e) + " is not a polynomial");
  return r.num();
}

}  // namespace frobdiff::cli
