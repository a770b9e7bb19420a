#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "gardner/exact.hpp"

namespace gardner {

/// Dense d x d matrix in row-major order. Element access is zero-based;
/// combinatorial labels elsewhere in the library (R_i, C_j, cells,
/// quadruples) are one-based.
template <class T>
class SquareMatrix {
 public:
  using value_type = T;

  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t d, const T& fill = T(0)) : d_(d), entries_(d * d, fill) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : d_(rows.size()) {
    entries_.reserve(d_ * d_);
    for (const auto& row : rows) {
      if (row.size() != d_) throw std::invalid_argument("SquareMatrix: ragged rows");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("SquareMatrix: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * m.d_);
    }
    return m;
  }

  static SquareMatrix zero(std::size_t d) { return SquareMatrix(d); }
  static SquareMatrix ones(std::size_t d) { return SquareMatrix(d, T(1)); }
  static SquareMatrix identity(std::size_t d) {
    SquareMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return d_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * d_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * d_ + j]; }

  std::span<const T> row(std::size_t i) const { return {entries_.data() + i * d_, d_}; }
  std::span<const T> entries() const { return entries_; }
  std::span<T> entries() { return entries_; }

  template <class U>
  SquareMatrix<U> cast() const {
    SquareMatrix<U> out(d_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries()[k] = U(entries_[k]);
    return out;
  }

  SquareMatrix& operator+=(const SquareMatrix& other) {
    require_same_size(other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& other) {
    require_same_size(other);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
  }
  SquareMatrix& operator*=(const T& c) {
    for (auto& x : entries_) x *= c;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(const T& c, SquareMatrix a) { return a *= c; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.d_ == b.d_ && a.entries_ == b.entries_;
  }

  T sum() const {
    T s(0);
    for (const auto& x : entries_) s += x;
    return s;
  }

  T min_entry() const { return *std::min_element(entries_.begin(), entries_.end()); }

  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    for (std::size_t i = 0; i < m.d_; ++i) {
      for (std::size_t j = 0; j < m.d_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

 private:
  void require_same_size(const SquareMatrix& other) const {
    if (other.d_ != d_) throw std::invalid_argument("SquareMatrix: dimension mismatch");
  }

  std::size_t d_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = SquareMatrix<Integer>;
using RationalMatrix = SquareMatrix<Rational>;

}  // namespace gardner
