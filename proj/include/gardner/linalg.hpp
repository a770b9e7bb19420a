#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gardner/exact.hpp"

namespace gardner::linalg {

/// Rectangular row-major matrix for the exact elimination routines.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("DenseMatrix: ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalDense = DenseMatrix<Rational>;
using IntegerDense = DenseMatrix<Integer>;
using RationalVector = std::vector<Rational>;

struct RowEchelon {
  RationalDense reduced;         ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column of each remaining row
};

RowEchelon rref(RationalDense m);
std::size_t rank(const RationalDense& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> nullspace(const RationalDense& m);

enum class SolveStatus { Inconsistent, Unique, Underdetermined };

struct Solution {
  SolveStatus status;
  RationalVector x;  ///< set when Unique; a particular solution when Underdetermined
};

Solution solve(const RationalDense& a, const RationalVector& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntegerDense m);
/// Rank by fraction-free elimination.
std::size_t rank(IntegerDense m);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace gardner::linalg
