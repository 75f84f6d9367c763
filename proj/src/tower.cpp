#include "frobdiff/tower.hpp"

#include <algorithm>

#include "frobdiff/linalg.hpp"

namespace frobdiff {

Tower::Tower(FieldSpec base, std::vector<InseparableGenerator> gens)
    : base_(std::move(base)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    std::uint64_t b = 1;
    for (unsigned i = 0; i < g.exponent; ++i) b *= base_.p;
    bounds_.push_back(static_cast<std::uint32_t>(b));
    height_ = std::max(height_, g.exponent);
  }
}

std::shared_ptr<const Tower> Tower::make(FieldSpec base, std::vector<InseparableGenerator> gens) {
  std::vector<std::string> seen = base.generators;
  for (const auto& g : gens) {
    if (g.name.empty() || std::find(seen.begin(), seen.end(), g.name) != seen.end()) {
      throw Error(ErrorCode::InvalidField, "bad or duplicate tower generator name '" + g.name + "'");
    }
    seen.push_back(g.name);
    if (g.exponent == 0 || g.exponent > 8) {
      throw Error(ErrorCode::InvalidField, "tower exponent must lie in 1..8");
    }
    if (g.value.p() != base.p || g.value.nvars() != base.nvars()) {
      throw Error(ErrorCode::FieldMismatch, "tower relation value outside the base field");
    }
  }
  if (!gens.empty()) {
    Matrix jac(gens.size(), base.nvars(), RatFunc::zero(base));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (std::size_t i = 0; i < base.nvars(); ++i) jac(j, i) = gens[j].value.partial(i);
    }
    if (base.nvars() < gens.size() || frobdiff::rank(jac) != gens.size()) {
      throw Error(ErrorCode::BasisViolation,
                  "tower relation values are not p-independent; the monomial basis is not free");
    }
  }
  return std::shared_ptr<const Tower>(new Tower(std::move(base), std::move(gens)));
}

std::size_t Tower::degree() const {
  std::size_t d = 1;
  for (auto b : bounds_) d *= b;
  return d;
}

std::optional<std::size_t> Tower::index_of(const std::string& name) const {
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (gens_[j].name == name) return j;
  }
  return std::nullopt;
}

std::vector<Exponents> Tower::basis() const {
  std::vector<Exponents> out;
  Exponents a(gens_.size(), 0);
  while (true) {
    out.push_back(a);
    std::size_t j = gens_.size();
    while (j-- > 0) {
      if (++a[j] < bounds_[j]) break;
      a[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

TowerElem::TowerElem(std::shared_ptr<const Tower> tower) : tower_(std::move(tower)) {}

TowerElem TowerElem::from_base(std::shared_ptr<const Tower> tower, const RatFunc& c) {
  TowerElem e(std::move(tower));
  e.add_reduced(Exponents(e.tower_->rank(), 0), c);
  return e;
}

TowerElem TowerElem::generator(std::shared_ptr<const Tower> tower, std::size_t j) {
  TowerElem e(std::move(tower));
  Exponents a(e.tower_->rank(), 0);
  a.at(j) = 1;
  e.add_reduced(a, RatFunc::one(e.tower_->base()));
  return e;
}

TowerElem TowerElem::from_terms(std::shared_ptr<const Tower> tower,
                                const std::vector<std::pair<Exponents, RatFunc>>& terms) {
  TowerElem e(std::move(tower));
  for (const auto& [a, c] : terms) {
    if (a.size() != e.tower_->rank()) throw Error(ErrorCode::BasisViolation, "exponent vector has wrong length");
    e.add_reduced(a, c);
  }
  return e;
}

void TowerElem::add_reduced(const Exponents& a, const RatFunc& c) {
  if (c.is_zero()) return;
  Exponents r = a;
  RatFunc coeff = c;
  const auto& bounds = tower_->bounds();
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] < bounds[j]) continue;
    std::uint32_t quotient = r[j] / bounds[j];
    r[j] %= bounds[j];
    coeff = coeff * tower_->generators()[j].value.pow(quotient);
  }
  auto [it, inserted] = terms_.try_emplace(r, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TowerElem::check_same(const TowerElem& other) const {
  if (tower_ != other.tower_) throw Error(ErrorCode::FieldMismatch, "elements of different towers");
}

RatFunc TowerElem::coefficient(const Exponents& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? RatFunc::zero(tower_->base()) : it->second;
}

bool TowerElem::in_base() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

TowerElem TowerElem::operator-() const {
  TowerElem r(tower_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
  a.check_same(b);
  TowerElem r = a;
  for (const auto& [e, c] : b.terms_) r.add_reduced(e, c);
  return r;
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) { return a + (-b); }

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
  a.check_same(b);
  TowerElem r(a.tower_);
  Exponents e(a.tower_->rank());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      r.add_reduced(e, ca * cb);
    }
  }
  return r;
}

TowerElem TowerElem::scaled(std::uint64_t c) const {
  TowerElem r(tower_);
  for (const auto& [a, x] : terms_) r.add_reduced(a, x.scaled(c));
  return r;
}

TowerElem TowerElem::times(const RatFunc& c) const {
  TowerElem r(tower_);
  for (const auto& [a, x] : terms_) r.add_reduced(a, x * c);
  return r;
}

TowerElem TowerElem::pow(std::uint64_t e) const {
  TowerElem result = from_base(tower_, RatFunc::one(tower_->base()));
  TowerElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TowerElem TowerElem::frobenius(unsigned k) const {
  if (k == 0) return *this;
  std::uint32_t factor = 1;
  for (unsigned i = 0; i < k; ++i) factor *= tower_->p();
  TowerElem r(tower_);
  for (const auto& [a, c] : terms_) {
    Exponents scaled = a;
    for (auto& x : scaled) x *= factor;
    r.add_reduced(scaled, c.frobenius(k));
  }
  return r;
}

// z^{p^E} lies in K, so z^{-1} = z^{p^E - 1} / z^{p^E}, and
// p^E - 1 = (p - 1)(1 + p + ... + p^{E-1}).
TowerElem TowerElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in tower");
  if (in_base()) return from_base(tower_, terms_.begin()->second.inverse());
  const unsigned height = tower_->height();
  TowerElem norm = frobenius(height);
  TowerElem y = pow(tower_->p() - 1);
  TowerElem cofactor = y;
  for (unsigned i = 1; i < height; ++i) cofactor = cofactor * y.frobenius(i);
  return cofactor.times(norm.coefficient(Exponents(tower_->rank(), 0)).inverse());
}

TowerDerivation::TowerDerivation(std::shared_ptr<const Tower> tower, FrobDerivation base,
                                 std::vector<TowerElem> images)
    : tower_(std::move(tower)), base_(std::move(base)), images_(std::move(images)) {
  if (!(base_.field() == tower_->base())) throw Error(ErrorCode::FieldMismatch, "derivation field differs from tower base");
  if (images_.size() != tower_->rank()) throw Error(ErrorCode::InvalidField, "need one image per tower generator");
  for (const auto& img : images_) {
    if (img.tower() != tower_) throw Error(ErrorCode::FieldMismatch, "tower image outside the tower");
  }
  for (const auto& g : tower_->generators()) {
    if (!base_.is_constant(g.value)) {
      throw Error(ErrorCode::InconsistentTower, "relation value for " + g.name + " is not a constant");
    }
  }
}

TowerElem TowerDerivation::derive(const TowerElem& a) const {
  const std::uint64_t q = base_.q();
  TowerElem result = zero();
  for (const auto& [exps, c] : a.terms()) {
    // d(c s^a) = c^q d(s^a) + (s^a)^q d(c)
    RatFunc dc = base_.derive(c);
    Exponents qa = exps;
    for (auto& x : qa) x = static_cast<std::uint32_t>(x * q);
    if (!dc.is_zero()) result += TowerElem::from_terms(tower_, {{qa, dc}});
    RatFunc cq = c.frobenius(base_.n());
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] % base_.p() == 0 || images_[j].is_zero()) continue;
      Exponents mono = qa;
      mono[j] -= static_cast<std::uint32_t>(q);
      TowerElem term = TowerElem::from_terms(tower_, {{mono, cq.scaled(exps[j])}});
      result += term * images_[j];
    }
  }
  return result;
}

TowerElem TowerDerivation::derive_iter(const TowerElem& a, unsigned k) const {
  TowerElem r = a;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = derive(r);
  return r;
}

std::string to_string(const TowerElem& a) {
  if (a.is_zero()) return "0";
  const Tower& tower = *a.tower();
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += tower.generators()[j].name;
      if (exps[j] > 1) mono += '^' + std::to_string(exps[j]);
    }
    std::string coeff = to_string(c, tower.base());
    if (mono.empty()) {
      out += coeff;
      continue;
    }
    if (c.is_one()) {
      out += mono;
      continue;
    }
    bool wrap = !c.is_polynomial() || c.num().size() > 1;
    out += (wrap ? '(' + coeff + ')' : coeff) + '*' + mono;
  }
  return out;
}

}  // namespace frobdiff
