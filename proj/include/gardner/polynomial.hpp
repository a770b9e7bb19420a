#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "gardner/exact.hpp"

namespace gardner {

/// g_d as an exact polynomial in N, constant term first.
class CountingPolynomial {
 public:
  /// Trailing zero coefficients are dropped; throws std::invalid_argument if
  /// nothing remains.
  CountingPolynomial(std::size_t d, std::vector<Rational> coeffs);

  std::size_t side() const { return d_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& n) const;

  /// "1 + 2N + N²".
  std::string to_string() const;
  /// {"d": 2, "coeffs": ["1", "2", "1"]}
  nlohmann::json to_json() const;
  static CountingPolynomial from_json(const nlohmann::json& j);

  friend bool operator==(const CountingPolynomial&, const CountingPolynomial&) = default;

 private:
  std::size_t d_;
  std::vector<Rational> coeffs_;
};

/// Lagrange interpolation of g_formula_3 through N = 0, ..., 2d - 2.
CountingPolynomial interpolate(std::size_t d);

enum class RootKind { NegativeInteger, CriticalLine, Both, Unclassified };

std::string to_string(RootKind kind);

struct RootInfo {
  std::complex<double> value;
  RootKind kind;
  /// Found by exact rational evaluation rather than numerically.
  bool exact;
};

struct RootReport {
  std::size_t d;
  double tol;
  std::vector<RootInfo> roots;
  bool passed;
};

/// Locates the 2d - 2 roots of interpolate(d) and classifies each as a
/// negative integer (within tol of some -k, k >= 1) or as lying on the line
/// Re = -d/2. Negative-integer roots are split off exactly first; the rest
/// come from companion-matrix eigenvalues polished by Newton steps.
/// Throws std::runtime_error if the eigenvalue iteration fails.
RootReport roots_check(std::size_t d, double tol = 1e-8);

/// Roots of sum_k coeffs[k] x^k (constant first, nonzero leading term) as
/// eigenvalues of the balanced companion matrix.
std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs);

}  // namespace gardner
