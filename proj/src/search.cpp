#include "frobdiff/search.hpp"
#include <functional>

#include <algorithm>

#include "frobdiff/error.hpp"

namespace frobdiff {

CandidateEnumerator::CandidateEnumerator(FieldSpec field, SearchConfig config)
    : field_(std::move(field)), config_(config) {
  const std::size_t k = field_.nvars();
  // all exponent vectors of total degree <= D, then sorted ascending
  Exponents e(k, 0);
  std::vector<Exponents> all;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == k) {
      all.push_back(e);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[i] = d;
      rec(i + 1, left - d);
    }
    e[i] = 0;
  };
  rec(0, config_.max_degree);
  GrlexGreater greater;
  std::sort(all.begin(), all.end(), [&](const Exponents& a, const Exponents& b) { return greater(b, a); });
  monomials_ = std::move(all);
  digits_.assign(monomials_.size(), 0);
}

Poly CandidateEnumerator::poly_from_digits(const std::vector<Coeff>& digits) const {
  Poly f(field_.p, field_.nvars());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) f.add_term(monomials_[i], digits[i]);
  }
  return f;
}

bool CandidateEnumerator::increment(std::vector<Coeff>& digits, std::uint32_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

bool CandidateEnumerator::advance_fraction() {
  const std::uint32_t p = field_.p;
  while (true) {
    if (!fractions_started_) {
      fractions_started_ = true;
      den_digits_.assign(monomials_.size(), 0);
      num_digits_.assign(monomials_.size(), 0);
      if (!increment(den_digits_, p)) return false;
    } else if (!increment(num_digits_, p)) {
      if (!increment(den_digits_, p)) return false;
    }
    Poly den = poly_from_digits(den_digits_);
    if (den.is_constant() || den.leading_coefficient() != 1) {
      std::fill(num_digits_.begin(), num_digits_.end(), p - 1);
      continue;
    }
    Poly num = poly_from_digits(num_digits_);
    if (num.is_zero()) continue;
    if (!gcd(num, den).is_one()) continue;
    return true;
  }
}

std::optional<RatFunc> CandidateEnumerator::next() {
  if (done_) return std::nullopt;
  if (produced_ >= config_.cap) {
    throw Error(ErrorCode::Exhausted, "candidate cap of " + std::to_string(config_.cap) + " reached");
  }
  if (!polys_done_) {
    if (started_ && !increment(digits_, field_.p)) {
      polys_done_ = true;
    } else {
      started_ = true;
      ++produced_;
      return RatFunc(poly_from_digits(digits_));
    }
  }
  if (config_.allow_fractions && advance_fraction()) {
    ++produced_;
    return RatFunc(poly_from_digits(num_digits_), poly_from_digits(den_digits_));
  }
  done_ = true;
  return std::nullopt;
}

}  // namespace frobdiff
