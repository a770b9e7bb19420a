#pragma once

#include <cstddef>
#include <vector>

#include "gardner/exact.hpp"
#include "gardner/g_matrix.hpp"

namespace gardner {

/// Default ceiling on candidate matrices visited by the brute-force counters.
inline const Integer kDefaultEnumerationBudget = 100'000'000;

// The number g_d(N) of integer G-matrices of side d and value N, three ways.
// Each requires d >= 1 and N >= 0 and throws std::domain_error otherwise.

/// Inclusion-exclusion over the maximal cells:
/// sum_{k=1}^d (-1)^{k-1} C(d,k) C(N+2d-k-1, 2d-k-1).
Integer g_formula_1(std::size_t d, const Integer& n);

/// Disjoint union of relatively open faces:
/// sum_{m=1}^{2d-1} [C(2d,m) - C(d,m-d)] C(N-1, m-1).
Integer g_formula_2(std::size_t d, const Integer& n);

/// Half-open decomposition: C(N+2d-1, 2d-1) - C(N+d-1, 2d-1).
Integer g_formula_3(std::size_t d, const Integer& n);

/// Calls f(const SquareMatrix<long long>&) for every d x d matrix with
/// entries in [lo, hi] that is a G-matrix of value n, in odometer order.
template <class F>
void for_each_small_g_matrix(std::size_t d, long long lo, long long hi, long long n, F&& f) {
  if (hi < lo) return;
  SquareMatrix<long long> a(d, lo);
  auto entries = a.entries();
  for (;;) {
    if (auto v = g_matrix_value(a); v && *v == n) f(static_cast<const SquareMatrix<long long>&>(a));
    std::size_t k = 0;
    while (k < entries.size() && entries[k] == hi) entries[k++] = lo;
    if (k == entries.size()) break;
    ++entries[k];
  }
}

/// Throws BudgetExceeded when (span)^(d^2) candidates exceed budget.
void require_enumeration_budget(std::size_t d, unsigned long span, const Integer& budget, const char* who);

/// Counts every d x d matrix with entries in {0..N} that passes the fast
/// G-matrix check with value N. Throws BudgetExceeded when (N+1)^(d^2)
/// exceeds the budget.
Integer g_bruteforce(std::size_t d, unsigned long n, const Integer& budget = kDefaultEnumerationBudget);

/// Counts label vectors (lambda, mu) >= 0 with total N and min(mu) = 0 by
/// enumerating compositions.
Integer g_labeling_oracle(std::size_t d, unsigned long n);

/// Like g_bruteforce but over entries in {1..N}: the interior lattice points
/// of N * G_d.
Integer interior_count_bruteforce(std::size_t d, unsigned long n,
                                  const Integer& budget = kDefaultEnumerationBudget);

// Lattice points in n-fold dilates of a unimodular (m-1)-simplex. At n = 0
// the open and half-open counts take the polynomial value (e.g. C(-1, m-1)),
// which is what the closed formulas need. Throw std::domain_error outside
// m >= 1, 0 <= u <= m, n >= 0.
Integer simplex_count(long m, const Integer& n);
Integer open_simplex_count(long m, const Integer& n);
Integer halfopen_simplex_count(long m, long u, const Integer& n);

/// f*_0, ..., f*_{2d-2}: f*_{m-1} is the number of (m-1)-dimensional faces
/// of the triangulation of G_d.
struct FStarVector {
  std::size_t d;
  std::vector<Integer> entries;

  friend bool operator==(const FStarVector&, const FStarVector&) = default;
};

/// Closed form C(2d, m) - C(d, m-d).
FStarVector f_star(std::size_t d);

/// Counts the distinct nonempty faces of the maximal cells, grouped by size.
FStarVector f_star_by_enumeration(std::size_t d);

}  // namespace gardner
