#pragma once

#include <vector>

#include "frobdiff/ratfunc.hpp"

namespace frobdiff {

/// Dense matrix over F_p(t), row-major.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const RatFunc& zero);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatFunc> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. Among the candidate pivots of a column the
/// smallest entry under compare() wins, so results are deterministic.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {c : m c = 0}; one vector per free column, with a 1 in that
/// column.
std::vector<std::vector<RatFunc>> nullspace(const Matrix& m);

}  // namespace frobdiff
