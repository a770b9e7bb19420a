#include "gardner/counting.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

#include "gardner/errors.hpp"
#include "gardner/g_matrix.hpp"
#include "gardner/polytope.hpp"

namespace gardner {

namespace {

void require_domain(std::size_t d, const Integer& n) {
  if (d == 0) throw std::domain_error("counting: d must be at least 1");
  if (n < 0) throw std::domain_error("counting: N must be nonnegative");
}

long as_long(std::size_t x) { return static_cast<long>(x); }

// Visits every d x d matrix with entries in [lo, hi] and counts those that
// are G-matrices of value n.
Integer count_g_matrices(std::size_t d, long long lo, long long hi, long long n) {
  std::uint64_t count = 0;
  for_each_small_g_matrix(d, lo, hi, n, [&](const SquareMatrix<long long>&) { ++count; });
  return Integer(std::to_string(count));
}

}  // namespace

void require_enumeration_budget(std::size_t d, unsigned long span, const Integer& budget, const char* who) {
  Integer candidates;
  mpz_ui_pow_ui(candidates.get_mpz_t(), span, d * d);
  if (candidates > budget) {
    throw BudgetExceeded(std::string(who) + ": " + candidates.get_str() +
                         " candidates exceed the budget of " + budget.get_str());
  }
}

Integer g_formula_1(std::size_t d, const Integer& n) {
  require_domain(d, n);
  const long dd = as_long(d);
  Integer sum = 0;
  for (long k = 1; k <= dd; ++k) {
    Integer term = binomial(dd, k) * binomial(n + 2 * dd - k - 1, 2 * dd - k - 1);
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer g_formula_2(std::size_t d, const Integer& n) {
  require_domain(d, n);
  const long dd = as_long(d);
  Integer sum = 0;
  for (long m = 1; m <= 2 * dd - 1; ++m) {
    sum += (binomial(2 * dd, m) - binomial(dd, m - dd)) * binomial(n - 1, m - 1);
  }
  return sum;
}

Integer g_formula_3(std::size_t d, const Integer& n) {
  require_domain(d, n);
  const long dd = as_long(d);
  return binomial(n + 2 * dd - 1, 2 * dd - 1) - binomial(n + dd - 1, 2 * dd - 1);
}

Integer g_bruteforce(std::size_t d, unsigned long n, const Integer& budget) {
  require_domain(d, 0);
  require_enumeration_budget(d, n + 1, budget, "g_bruteforce");
  return count_g_matrices(d, 0, static_cast<long long>(n), static_cast<long long>(n));
}

Integer interior_count_bruteforce(std::size_t d, unsigned long n, const Integer& budget) {
  require_domain(d, 0);
  require_enumeration_budget(d, n, budget, "interior_count_bruteforce");
  return count_g_matrices(d, 1, static_cast<long long>(n), static_cast<long long>(n));
}

namespace {

// Extends a partial composition by parts_left more labels summing to
// remaining; the last mu_left labels are the row labels.
void enumerate_labels(std::size_t parts_left, std::size_t mu_left, unsigned long remaining,
                      bool mu_has_zero, std::uint64_t& count) {
  if (parts_left == 0) {
    if (remaining == 0 && mu_has_zero) ++count;
    return;
  }
  const bool is_mu = parts_left <= mu_left;
  for (unsigned long x = 0; x <= remaining; ++x) {
    enumerate_labels(parts_left - 1, mu_left, remaining - x, mu_has_zero || (is_mu && x == 0), count);
  }
}

}  // namespace

Integer g_labeling_oracle(std::size_t d, unsigned long n) {
  require_domain(d, 0);
  std::uint64_t count = 0;
  enumerate_labels(2 * d, d, n, false, count);
  return Integer(std::to_string(count));
}

Integer simplex_count(long m, const Integer& n) {
  if (m < 1 || n < 0) throw std::domain_error("simplex_count: requires m >= 1 and n >= 0");
  return binomial(n + m - 1, m - 1);
}

Integer open_simplex_count(long m, const Integer& n) {
  if (m < 1 || n < 0) throw std::domain_error("open_simplex_count: requires m >= 1 and n >= 0");
  return binomial(n - 1, m - 1);
}

Integer halfopen_simplex_count(long m, long u, const Integer& n) {
  if (m < 1 || u < 0 || u > m || n < 0) {
    throw std::domain_error("halfopen_simplex_count: requires m >= 1, 0 <= u <= m, n >= 0");
  }
  return binomial(n - 1 + m - u, m - 1);
}

FStarVector f_star(std::size_t d) {
  require_domain(d, 0);
  const long dd = as_long(d);
  FStarVector out{d, {}};
  for (long m = 1; m <= 2 * dd - 1; ++m) out.entries.push_back(binomial(2 * dd, m) - binomial(dd, m - dd));
  return out;
}

FStarVector f_star_by_enumeration(std::size_t d) {
  require_domain(d, 0);
  if (d > 12) throw std::domain_error("f_star_by_enumeration: d too large for subset enumeration");
  // Faces are vertex subsets, encoded as bitmasks over the canonical order.
  std::set<std::uint64_t> faces;
  for (const auto& cell : triangulation_cells(d)) {
    std::vector<std::size_t> bits;
    for (const auto& v : cell.vertices()) bits.push_back(v.ordinal());
    const std::uint64_t subsets = std::uint64_t{1} << bits.size();
    for (std::uint64_t s = 1; s < subsets; ++s) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < bits.size(); ++b) {
        if (s >> b & 1) mask |= std::uint64_t{1} << bits[b];
      }
      faces.insert(mask);
    }
  }
  FStarVector out{d, std::vector<Integer>(2 * d - 1, 0)};
  for (std::uint64_t mask : faces) out.entries[static_cast<std::size_t>(__builtin_popcountll(mask)) - 1] += 1;
  return out;
}

}  // namespace gardner
