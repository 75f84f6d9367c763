#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobdiff/ratfunc.hpp"

namespace frobdiff {

struct SearchConfig {
  unsigned max_degree = 3;
  bool allow_fractions = false;
  /// Candidates examined before giving up with Exhausted.
  std::uint64_t cap = 1'000'000;
};

/// Deterministic enumeration of candidate elements of F_p(t).
///
/// Polynomials of total degree <= max_degree come first. Their coefficient
/// vectors are counted base p over the monomials in ascending graded-lex
/// order, the constant term being the least significant digit, so the
/// sequence starts 0, 1, t, t + 1, t^2, ... With allow_fractions, reduced
/// quotients u/v follow, v running over monic nonconstant denominators.
class CandidateEnumerator {
 public:
  CandidateEnumerator(FieldSpec field, SearchConfig config);

  /// Next candidate, or nullopt once the search space is finished. Throws
  /// Exhausted when the cap is hit first.
  std::optional<RatFunc> next();
  std::uint64_t produced() const { return produced_; }

  /// Monomials of degree <= max_degree in ascending graded-lex order.
  const std::vector<Exponents>& monomials() const { return monomials_; }

 private:
  Poly poly_from_digits(const std::vector<Coeff>& digits) const;
  static bool increment(std::vector<Coeff>& digits, std::uint32_t p);
  bool advance_fraction();

  FieldSpec field_;
  SearchConfig config_;
  std::vector<Exponents> monomials_;
  std::vector<Coeff> digits_;
  bool polys_done_ = false;
  bool started_ = false;
  // fraction phase: denominator digits and numerator digits
  std::vector<Coeff> den_digits_;
  std::vector<Coeff> num_digits_;
  bool fractions_started_ = false;
  bool done_ = false;
  std::uint64_t produced_ = 0;
};

/// First candidate satisfying `pred`, in enumeration order.
template <class Pred>
std::optional<RatFunc> search_first(const FieldSpec& field, const SearchConfig& config, Pred&& pred) {
  CandidateEnumerator en(field, config);
  while (auto c = en.next()) {
    if (pred(*c)) return c;
  }
  return std::nullopt;
}

}  // namespace frobdiff
