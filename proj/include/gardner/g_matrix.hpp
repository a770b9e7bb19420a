#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gardner/errors.hpp"
#include "gardner/exact.hpp"
#include "gardner/permutation.hpp"
#include "gardner/square_matrix.hpp"

namespace gardner {

/// Sum of A(i, sigma(i)) over all rows: the numbers covered by the rook
/// placement sigma.
template <class T>
T permutation_sum(const SquareMatrix<T>& a, const Permutation& sigma) {
  if (sigma.size() != a.size()) {
    throw std::invalid_argument("permutation_sum: permutation size differs from matrix size");
  }
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a(i, sigma(i));
  return s;
}

/// One-based (i, j, k, l) with A_ij + A_kl != A_il + A_kj.
using Quadruple = std::array<std::size_t, 4>;

/// Two rook placements that differ by one transposition and cover
/// different sums.
template <class T>
struct Witness {
  Quadruple quadruple;
  Permutation first;
  Permutation second;
  T first_sum;
  T second_sum;
};

template <class T>
struct CheckResult {
  std::optional<T> value;
  std::optional<Witness<T>> witness;
  /// Zero-based position of a negative entry, if that is why the check failed.
  std::optional<std::pair<std::size_t, std::size_t>> negative_entry;

  explicit operator bool() const { return value.has_value(); }
};

/// Value of A as a G-matrix, or nothing. O(d^2): nonnegativity plus the
/// reduction A_ij = A_1j + A_i1 - A_11, which implies every 2x2 exchange
/// condition.
template <class T>
std::optional<T> g_matrix_value(const SquareMatrix<T>& a) {
  const std::size_t d = a.size();
  for (const auto& x : a.entries()) {
    if (x < 0) return std::nullopt;
  }
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = 1; j < d; ++j) {
      if (a(i, j) + a(0, 0) != a(0, j) + a(i, 0)) return std::nullopt;
    }
  }
  T trace(0);
  for (std::size_t i = 0; i < d; ++i) trace += a(i, i);
  return trace;
}

namespace detail {

// Completes the partial assignment {row_a -> col_a, row_b -> col_b} to a
// permutation, matching the remaining rows to the remaining columns in
// increasing order.
inline Permutation complete_assignment(std::size_t d, std::size_t row_a, std::size_t col_a,
                                       std::size_t row_b, std::size_t col_b) {
  std::vector<std::size_t> images(d, d);
  std::vector<bool> used(d, false);
  images[row_a] = col_a;
  images[row_b] = col_b;
  used[col_a] = used[col_b] = true;
  std::size_t next = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (images[i] != d) continue;
    while (used[next]) ++next;
    images[i] = next;
    used[next] = true;
  }
  return Permutation(std::move(images));
}

}  // namespace detail

/// The O(d^2) G-matrix test. On a failed exchange condition the result
/// carries a witness: the two placements agree outside rows {1, i} and swap
/// columns {1, j} there, so their sums differ by exactly the violation.
template <class T>
CheckResult<T> is_g_matrix_fast(const SquareMatrix<T>& a) {
  CheckResult<T> result;
  const std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (a(i, j) < 0) {
        result.negative_entry = std::make_pair(i, j);
        return result;
      }
    }
  }
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = 1; j < d; ++j) {
      if (a(i, j) + a(0, 0) == a(0, j) + a(i, 0)) continue;
      Permutation first = detail::complete_assignment(d, 0, 0, i, j);
      Permutation second = detail::complete_assignment(d, 0, j, i, 0);
      T first_sum = permutation_sum(a, first);
      T second_sum = permutation_sum(a, second);
      result.witness = Witness<T>{Quadruple{1, 1, i + 1, j + 1}, std::move(first),
                                  std::move(second), std::move(first_sum), std::move(second_sum)};
      return result;
    }
  }
  T trace(0);
  for (std::size_t i = 0; i < d; ++i) trace += a(i, i);
  result.value = std::move(trace);
  return result;
}

inline constexpr std::size_t kDefaultFactorialGuard = 9;

/// Sweeps all d! placements. Throws GuardExceeded when d exceeds max_side.
template <class T>
std::optional<T> is_g_matrix_bruteforce(const SquareMatrix<T>& a,
                                        std::size_t max_side = kDefaultFactorialGuard) {
  const std::size_t d = a.size();
  if (d > max_side) {
    throw GuardExceeded("is_g_matrix_bruteforce: d = " + std::to_string(d) +
                        " exceeds the factorial guard " + std::to_string(max_side));
  }
  for (const auto& x : a.entries()) {
    if (x < 0) return std::nullopt;
  }
  std::optional<T> common;
  bool agree = true;
  for_each_permutation(d, [&](const Permutation& sigma) {
    if (!agree) return;
    T s = permutation_sum(a, sigma);
    if (!common) {
      common = std::move(s);
    } else if (s != *common) {
      agree = false;
    }
  });
  if (!agree) return std::nullopt;
  return common;
}

/// A nonnegative matrix certified to have a constant permutation sum.
template <class T>
class BasicGMatrix {
 public:
  /// Throws std::invalid_argument if m is not a G-matrix.
  static BasicGMatrix certify(SquareMatrix<T> m) {
    if (m.size() == 0) throw std::invalid_argument("G-matrix must have side length >= 1");
    auto check = is_g_matrix_fast(m);
    if (!check) {
      std::ostringstream os;
      os << "not a G-matrix";
      if (check.negative_entry) {
        os << ": negative entry at (" << check.negative_entry->first + 1 << ", "
           << check.negative_entry->second + 1 << ")";
      } else if (check.witness) {
        os << ": placements " << check.witness->first.to_string() << " and "
           << check.witness->second.to_string() << " cover " << check.witness->first_sum
           << " and " << check.witness->second_sum;
      }
      throw std::invalid_argument(os.str());
    }
    return BasicGMatrix(std::move(m), std::move(*check.value));
  }

  static std::optional<BasicGMatrix> try_certify(SquareMatrix<T> m) {
    if (m.size() == 0) return std::nullopt;
    auto value = g_matrix_value(m);
    if (!value) return std::nullopt;
    return BasicGMatrix(std::move(m), std::move(*value));
  }

  const SquareMatrix<T>& matrix() const { return matrix_; }
  const T& value() const { return value_; }
  std::size_t size() const { return matrix_.size(); }
  const T& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  friend bool operator==(const BasicGMatrix& a, const BasicGMatrix& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  BasicGMatrix(SquareMatrix<T> m, T value) : matrix_(std::move(m)), value_(std::move(value)) {}

  SquareMatrix<T> matrix_;
  T value_;
};

using GMatrix = BasicGMatrix<Integer>;
using RationalGMatrix = BasicGMatrix<Rational>;

/// Column labels lambda_j and row labels mu_i of an addition table
/// A_ij = mu_i + lambda_j.
template <class T>
class BasicLabeling {
 public:
  BasicLabeling(std::vector<T> lambda, std::vector<T> mu)
      : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (lambda_.empty() || lambda_.size() != mu_.size()) {
      throw std::invalid_argument("Labeling: lambda and mu must be nonempty and of equal length");
    }
    for (const auto& x : lambda_) {
      if (x < 0) throw std::invalid_argument("Labeling: negative column label");
    }
    for (const auto& x : mu_) {
      if (x < 0) throw std::invalid_argument("Labeling: negative row label");
    }
  }

  std::size_t size() const { return lambda_.size(); }
  const std::vector<T>& lambda() const { return lambda_; }
  const std::vector<T>& mu() const { return mu_; }

  T total() const {
    T s(0);
    for (const auto& x : lambda_) s += x;
    for (const auto& x : mu_) s += x;
    return s;
  }

  /// min(mu) = 0: the representative chosen by the columns-first
  /// decomposition.
  bool is_canonical() const { return *std::min_element(mu_.begin(), mu_.end()) == 0; }

  friend bool operator==(const BasicLabeling&, const BasicLabeling&) = default;

 private:
  std::vector<T> lambda_;
  std::vector<T> mu_;
};

using Labeling = BasicLabeling<Integer>;
using RationalLabeling = BasicLabeling<Rational>;

enum class DecompositionOrder { ColumnsFirst, RowsFirst };

/// Peels off column minima, then row minima of the remainder (or the other
/// way round for RowsFirst). The residue of a genuine G-matrix is zero;
/// anything else throws InvariantViolation.
template <class T>
BasicLabeling<T> decompose_canonical(const BasicGMatrix<T>& g,
                                     DecompositionOrder order = DecompositionOrder::ColumnsFirst) {
  const std::size_t d = g.size();
  SquareMatrix<T> rest = g.matrix();
  std::vector<T> lambda(d, T(0));
  std::vector<T> mu(d, T(0));

  auto peel_columns = [&] {
    for (std::size_t j = 0; j < d; ++j) {
      T m = rest(0, j);
      for (std::size_t i = 1; i < d; ++i) m = std::min<T>(m, rest(i, j));
      for (std::size_t i = 0; i < d; ++i) rest(i, j) -= m;
      lambda[j] = std::move(m);
    }
  };
  auto peel_rows = [&] {
    for (std::size_t i = 0; i < d; ++i) {
      T m = rest(i, 0);
      for (std::size_t j = 1; j < d; ++j) m = std::min<T>(m, rest(i, j));
      for (std::size_t j = 0; j < d; ++j) rest(i, j) -= m;
      mu[i] = std::move(m);
    }
  };

  if (order == DecompositionOrder::ColumnsFirst) {
    peel_columns();
    peel_rows();
  } else {
    peel_rows();
    peel_columns();
  }
  for (const auto& x : rest.entries()) {
    if (x != 0) throw InvariantViolation("decompose_canonical: nonzero residue; input is not a G-matrix");
  }
  return BasicLabeling<T>(std::move(lambda), std::move(mu));
}

/// The addition table A_ij = mu_i + lambda_j; its value is the label total.
template <class T>
BasicGMatrix<T> compose(const BasicLabeling<T>& labels) {
  const std::size_t d = labels.size();
  SquareMatrix<T> m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = labels.mu()[i] + labels.lambda()[j];
  }
  return BasicGMatrix<T>::certify(std::move(m));
}

/// Entrywise c * A; the value scales by c. Requires c > 0.
template <class T>
RationalGMatrix scale(const BasicGMatrix<T>& g, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("scale: factor must be positive");
  RationalMatrix m = g.matrix().template cast<Rational>();
  m *= c;
  return RationalGMatrix::certify(std::move(m));
}

}  // namespace gardner
