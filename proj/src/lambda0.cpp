#include "frobdiff/lambda0.hpp"

#include <algorithm>

namespace frobdiff {

TermPtr Term::make_jet(std::size_t i) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Jet;
  t->jet = i;
  return t;
}

TermPtr Term::make_const(RatFunc c) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Const;
  t->value = std::move(c);
  return t;
}

TermPtr Term::make(Kind kind, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->args = std::move(args);
  return t;
}

TermPtr Term::make_pow(TermPtr base, std::uint64_t e) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Pow;
  t->exponent = e;
  t->args = {std::move(base)};
  return t;
}

Lambda0Formula Lambda0Formula::make_atom(TermPtr lhs, TermPtr rhs, bool equal) {
  Lambda0Formula f;
  f.atom = frobdiff::Atom{std::move(lhs), std::move(rhs), equal};
  return f;
}

Lambda0Formula Lambda0Formula::make_and(std::vector<Lambda0Formula> parts) {
  Lambda0Formula f;
  f.kind = Kind::And;
  f.children = std::move(parts);
  return f;
}

Lambda0Formula Lambda0Formula::make_or(std::vector<Lambda0Formula> parts) {
  Lambda0Formula f;
  f.kind = Kind::Or;
  f.children = std::move(parts);
  return f;
}

namespace {

using Conjunction = std::vector<Atom>;

std::vector<Conjunction> to_dnf(const Lambda0Formula& phi) {
  switch (phi.kind) {
    case Lambda0Formula::Kind::Atom:
      return {{phi.atom}};
    case Lambda0Formula::Kind::Or: {
      std::vector<Conjunction> out;
      for (const auto& c : phi.children) {
        auto part = to_dnf(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Lambda0Formula::Kind::And: {
      std::vector<Conjunction> out{{}};
      for (const auto& c : phi.children) {
        std::vector<Conjunction> next;
        for (const auto& left : out) {
          for (const auto& right : to_dnf(c)) {
            Conjunction joined = left;
            joined.insert(joined.end(), right.begin(), right.end());
            next.push_back(std::move(joined));
          }
        }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

bool contains_lambda0(const Term& t) {
  if (t.kind == Term::Kind::Lambda0) return true;
  return std::any_of(t.args.begin(), t.args.end(), [](const TermPtr& a) { return contains_lambda0(*a); });
}

// Polynomials in Z_i = lambda0(b_i) with coefficients in K{X}.
using ZPoly = SparsePoly<DiffPoly>;

class Lowering {
 public:
  Lowering(const FrobDerivation& d) : d_(d), one_(DiffPoly::constant(d.one())) {}

  ZPoly lower(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Jet:
        return ZPoly::constant(jet_variable(d_.field(), t.jet));
      case Term::Kind::Const:
        return t.value.is_zero() ? ZPoly() : ZPoly::constant(DiffPoly::constant(t.value));
      case Term::Kind::Add:
        return lower(*t.args.at(0)) + lower(*t.args.at(1));
      case Term::Kind::Sub:
        return lower(*t.args.at(0)) - lower(*t.args.at(1));
      case Term::Kind::Mul:
        return lower(*t.args.at(0)) * lower(*t.args.at(1));
      case Term::Kind::Neg:
        return -lower(*t.args.at(0));
      case Term::Kind::Pow:
        return lower(*t.args.at(0)).pow(t.exponent, one_);
      case Term::Kind::Derive: {
        if (contains_lambda0(*t.args.at(0))) {
          throw Error(ErrorCode::UnsupportedNesting, "lambda0 under d is not supported");
        }
        return ZPoly::constant(delta(d_, term_to_diffpoly(d_, *t.args.at(0))));
      }
      case Term::Kind::Lambda0: {
        if (contains_lambda0(*t.args.at(0))) {
          throw Error(ErrorCode::UnsupportedNesting, "nested lambda0 is not supported");
        }
        DiffPoly b = term_to_diffpoly(d_, *t.args.at(0));
        auto it = std::find(occurrences_.begin(), occurrences_.end(), b);
        std::size_t index = static_cast<std::size_t>(it - occurrences_.begin());
        if (it == occurrences_.end()) occurrences_.push_back(b);
        return ZPoly::variable(index, one_);
      }
    }
    return ZPoly();
  }

  const std::vector<DiffPoly>& occurrences() const { return occurrences_; }

 private:
  const FrobDerivation& d_;
  DiffPoly one_;
  std::vector<DiffPoly> occurrences_;
};

// Truth value of a condition on a constant, if it is one.
std::optional<bool> constant_truth(const PolyAtom& a) {
  if (!a.poly.is_constant()) return std::nullopt;
  return a.poly.is_zero() == a.equal;
}

}  // namespace

DiffPoly term_to_diffpoly(const FrobDerivation& d, const Term& t) {
  Lowering low(d);
  if (contains_lambda0(t)) throw Error(ErrorCode::UnsupportedNesting, "term contains lambda0");
  ZPoly z = low.lower(t);
  return z.is_zero() ? DiffPoly() : z.terms().begin()->second;
}

std::vector<Branch> lambda0_rewrite(const FrobDerivation& d, const Lambda0Formula& phi) {
  const std::uint32_t p = d.p();
  std::vector<Branch> out;
  for (const auto& conj : to_dnf(phi)) {
    Lowering low(d);
    std::vector<std::pair<ZPoly, bool>> atoms;
    for (const auto& a : conj) atoms.emplace_back(low.lower(*a.lhs) - low.lower(*a.rhs), a.equal);
    const auto& occ = low.occurrences();
    const std::size_t r = occ.size();
    // choice bit 1 = zero branch; the first occurrence is the most significant
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
      auto is_zero_branch = [&](std::size_t i) { return ((mask >> (r - 1 - i)) & 1) != 0; };
      Branch branch;
      bool alive = true;
      auto push = [&](PolyAtom atom) {
        if (auto truth = constant_truth(atom)) {
          if (!*truth) alive = false;
          return;
        }
        if (std::find(branch.atoms.begin(), branch.atoms.end(), atom) == branch.atoms.end()) {
          branch.atoms.push_back(std::move(atom));
        }
      };
      for (std::size_t i = 0; i < r && alive; ++i) push(PolyAtom{delta(d, occ[i]), !is_zero_branch(i)});
      for (const auto& [poly, equal] : atoms) {
        if (!alive) break;
        // drop Z_i in zero branches, then raise to the p-th power if Z remains
        ZPoly kept;
        for (const auto& [e, c] : poly.terms()) {
          bool vanishes = false;
          for (std::size_t i = 0; i < e.size(); ++i) vanishes = vanishes || (e[i] > 0 && is_zero_branch(i));
          if (!vanishes) kept.add_term(e, c);
        }
        DiffPoly lowered;
        if (kept.max_variable() < 0) {
          if (auto c = kept.constant_coefficient()) lowered = *c;
        } else {
          for (const auto& [e, c] : kept.terms()) {
            DiffPoly term = c.frobenius(1, p);
            for (std::size_t i = 0; i < e.size(); ++i) {
              if (e[i] > 0) term = term * occ[i].pow(e[i], d.one());
            }
            lowered += term;
          }
        }
        push(PolyAtom{lowered, equal});
      }
      if (alive) out.push_back(std::move(branch));
    }
  }
  return out;
}

namespace {

RatFunc eval_term(const FrobDerivation& d, const Term& t, const RatFunc& a) {
  switch (t.kind) {
    case Term::Kind::Jet:
      return d.derive_iter(a, static_cast<unsigned>(t.jet));
    case Term::Kind::Const:
      return t.value;
    case Term::Kind::Add:
      return eval_term(d, *t.args[0], a) + eval_term(d, *t.args[1], a);
    case Term::Kind::Sub:
      return eval_term(d, *t.args[0], a) - eval_term(d, *t.args[1], a);
    case Term::Kind::Mul:
      return eval_term(d, *t.args[0], a) * eval_term(d, *t.args[1], a);
    case Term::Kind::Neg:
      return -eval_term(d, *t.args[0], a);
    case Term::Kind::Pow:
      return eval_term(d, *t.args[0], a).pow(static_cast<std::int64_t>(t.exponent));
    case Term::Kind::Derive:
      return d.derive(eval_term(d, *t.args[0], a));
    case Term::Kind::Lambda0:
      return lambda0(eval_term(d, *t.args[0], a));
  }
  return d.zero();
}

}  // namespace

bool evaluate_formula(const FrobDerivation& d, const Lambda0Formula& phi, const RatFunc& a) {
  switch (phi.kind) {
    case Lambda0Formula::Kind::Atom: {
      bool same = eval_term(d, *phi.atom.lhs, a) == eval_term(d, *phi.atom.rhs, a);
      return same == phi.atom.equal;
    }
    case Lambda0Formula::Kind::And:
      return std::all_of(phi.children.begin(), phi.children.end(),
                         [&](const Lambda0Formula& c) { return evaluate_formula(d, c, a); });
    case Lambda0Formula::Kind::Or:
      return std::any_of(phi.children.begin(), phi.children.end(),
                         [&](const Lambda0Formula& c) { return evaluate_formula(d, c, a); });
  }
  return false;
}

bool evaluate_branches(const FrobDerivation& d, const std::vector<Branch>& branches, const RatFunc& a) {
  return std::any_of(branches.begin(), branches.end(), [&](const Branch& b) {
    return std::all_of(b.atoms.begin(), b.atoms.end(), [&](const PolyAtom& atom) {
      return evaluate_at(d, atom.poly, a).is_zero() == atom.equal;
    });
  });
}

std::string to_string(const Branch& b, const FieldSpec& field) {
  if (b.atoms.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < b.atoms.size(); ++i) {
    if (i) out += " & ";
    out += to_string(b.atoms[i].poly, field) + (b.atoms[i].equal ? " = 0" : " != 0");
  }
  return out;
}

}  // namespace frobdiff
