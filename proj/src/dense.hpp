#pragma once

// Dense arithmetic for polynomials that involve at most two variables.
// Most elements met in practice live in F_p(t) or F_p(s, t), where the
// sparse map representation spends its time allocating exponent vectors.

#include <optional>
#include <vector>

#include "frobdiff/poly.hpp"

namespace frobdiff::dense {

/// Indices of the variables involved in a or b, when there are at most two.
std::optional<std::vector<std::size_t>> small_support(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b, const std::vector<std::size_t>& vars);
std::optional<Poly> divide_exact(const Poly& a, const Poly& b, const std::vector<std::size_t>& vars);

}  // namespace frobdiff::dense
