#include "gardner/duality.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gardner/polytope.hpp"

namespace gardner {

using linalg::RationalDense;
using linalg::RationalVector;

IntMatrix permutation_matrix(const Permutation& sigma) {
  IntMatrix m(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) m(i, sigma(i)) = 1;
  return m;
}

RationalVector flatten(const RationalMatrix& m) {
  return RationalVector(m.entries().begin(), m.entries().end());
}

RationalMatrix unflatten(const RationalVector& v, std::size_t d) {
  if (v.size() != d * d) throw std::invalid_argument("unflatten: length is not d^2");
  RationalMatrix m(d);
  std::copy(v.begin(), v.end(), m.entries().begin());
  return m;
}

AffineSubspace gardner_affine_hull(std::size_t d) {
  const std::size_t rows = 1 + (d - 1) * (d - 1);
  RationalDense a(rows, d * d);
  RationalVector b(rows, Rational(0));
  for (std::size_t k = 0; k < d * d; ++k) a(0, k) = 1;
  b[0] = static_cast<long>(d);
  std::size_t r = 1;
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = 1; j < d; ++j, ++r) {
      a(r, 0) += 1;
      a(r, i * d + j) += 1;
      a(r, j) -= 1;
      a(r, i * d) -= 1;
    }
  }
  return AffineSubspace::from_equations(a, b);
}

AffineSubspace birkhoff_affine_hull(std::size_t d) {
  RationalDense a(2 * d, d * d);
  RationalVector b(2 * d, Rational(1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a(i, i * d + j) = 1;
      a(d + j, i * d + j) = 1;
    }
  }
  return AffineSubspace::from_equations(a, b);
}

namespace {

Rational random_unit(std::mt19937_64& rng) { return abs(random_rational(rng, 1000, 1000)) / 1000; }

Permutation random_permutation(std::size_t d, std::mt19937_64& rng) {
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

// Random point of G_d: nonnegative labels scaled to total 1.
RationalMatrix random_gardner_point(std::size_t d, std::mt19937_64& rng) {
  std::vector<Rational> lambda, mu;
  Rational total = 0;
  for (std::size_t k = 0; k < 2 * d; ++k) {
    Rational x = random_unit(rng);
    total += x;
    (k < d ? lambda : mu).push_back(x);
  }
  if (total == 0) {
    lambda[0] = 1;
    total = 1;
  }
  RationalMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = (mu[i] + lambda[j]) / total;
  }
  return m;
}

// Random point of B_d: a convex combination of a few permutation matrices.
RationalMatrix random_birkhoff_point(std::size_t d, std::mt19937_64& rng) {
  RationalMatrix m(d);
  Rational total = 0;
  std::vector<std::pair<Rational, Permutation>> terms;
  for (std::size_t k = 0; k < d + 1; ++k) {
    Rational w = random_unit(rng) + Rational(1, 1000);
    total += w;
    terms.emplace_back(w, random_permutation(d, rng));
  }
  for (const auto& [w, sigma] : terms) {
    for (std::size_t i = 0; i < d; ++i) m(i, sigma(i)) += w / total;
  }
  return m;
}

RationalMatrix random_nonnegative(std::size_t d, std::mt19937_64& rng) {
  RationalMatrix m(d);
  for (auto& x : m.entries()) x = random_unit(rng);
  return m;
}

void perturb(RationalMatrix& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, m.size() * m.size() - 1);
  m.entries()[pick(rng)] += 1;
}

bool pairs_to_one_with_all_permutations(const RationalMatrix& a) {
  bool ok = true;
  for_each_permutation(a.size(), [&](const Permutation& sigma) {
    if (ok && pairing(a, permutation_matrix(sigma).cast<Rational>()) != 1) ok = false;
  });
  return ok;
}

bool pairs_to_one_with_gardner_vertices(const RationalMatrix& b) {
  for (const auto& v : all_vertices(b.size())) {
    if (pairing(b, vertex_matrix(v).cast<Rational>()) != 1) return false;
  }
  return true;
}

bool in_unit_cube(const RationalMatrix& m) {
  for (const auto& x : m.entries()) {
    if (x < 0 || x > 1) return false;
  }
  return true;
}

std::string describe(const char* what, const RationalMatrix& m) {
  std::ostringstream os;
  os << what << ":\n" << m;
  return os.str();
}

}  // namespace

GalePairReport gale_pair_check(std::size_t d, std::size_t sample_count, std::uint64_t seed,
                               std::size_t max_side) {
  if (d == 0) throw std::invalid_argument("gale_pair_check: d must be at least 1");
  if (d > max_side) {
    throw GuardExceeded("gale_pair_check: d = " + std::to_string(d) + " exceeds the factorial guard " +
                        std::to_string(max_side));
  }
  GalePairReport report;
  report.d = d;

  // R_1 = C_1 when d = 1, so pair distinct vertex matrices only.
  std::vector<IntMatrix> g_vertices;
  for (const auto& v : all_vertices(d)) {
    IntMatrix m = vertex_matrix(v);
    if (std::find(g_vertices.begin(), g_vertices.end(), m) == g_vertices.end()) g_vertices.push_back(m);
  }
  for_each_permutation(d, [&](const Permutation& sigma) {
    const IntMatrix p = permutation_matrix(sigma);
    for (const auto& v : g_vertices) {
      ++report.vertex_pairings;
      if (pairing(v, p) != 1) {
        report.counterexamples.push_back("vertex pairing with " + sigma.to_string() + " is not 1");
      }
    }
  });

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < sample_count; ++s) {
    const std::size_t kind = s % 3;

    RationalMatrix a = kind == 2 ? random_nonnegative(d, rng) : random_gardner_point(d, rng);
    if (kind == 1) perturb(a, rng);
    const bool by_permutations = pairs_to_one_with_all_permutations(a);
    const auto check = is_g_matrix_fast(a);
    const bool by_fast_check = check.value && *check.value == 1;
    ++report.g_samples;
    if (kind == 1 && !by_permutations) ++report.perturbation_witnesses;
    if (by_permutations != by_fast_check) {
      report.counterexamples.push_back(describe("G_d descriptions disagree on", a));
    }

    RationalMatrix b = kind == 2 ? random_nonnegative(d, rng) : random_birkhoff_point(d, rng);
    if (kind == 1) perturb(b, rng);
    ++report.b_samples;
    if (is_doubly_stochastic(b) != pairs_to_one_with_gardner_vertices(b)) {
      report.counterexamples.push_back(describe("B_d descriptions disagree on", b));
    }
  }
  return report;
}

bool PolyhedronDescription::contains(const RationalVector& x) const {
  if (x.size() != equations.cols()) return false;
  for (const auto& c : x) {
    if (c < 0) return false;
  }
  for (std::size_t r = 0; r < equations.rows(); ++r) {
    if (linalg::dot(equations.row(r), x) != rhs[r]) return false;
  }
  return true;
}

namespace {

PolyhedronDescription describe_orthant_section(const AffineSubspace& l) {
  const auto normals = l.normals();
  PolyhedronDescription p{RationalDense(normals.size(), l.ambient_dimension()), {}};
  for (std::size_t r = 0; r < normals.size(); ++r) {
    for (std::size_t c = 0; c < l.ambient_dimension(); ++c) p.equations(r, c) = normals[r][c];
    p.rhs.push_back(linalg::dot(normals[r], l.base()));
  }
  return p;
}

// A point of L near its base point that stays in the orthant; the base
// point is strictly positive, so halving the step terminates.
RationalVector sample_near_base(const AffineSubspace& l, std::mt19937_64& rng) {
  RationalVector step(l.ambient_dimension(), Rational(0));
  for (const auto& dir : l.directions()) {
    const Rational t = random_rational(rng, 100, 100);
    for (std::size_t c = 0; c < step.size(); ++c) step[c] += t * dir[c];
  }
  for (;;) {
    RationalVector x = l.base();
    bool nonnegative = true;
    for (std::size_t c = 0; c < x.size(); ++c) {
      x[c] += step[c];
      nonnegative = nonnegative && x[c] >= 0;
    }
    if (nonnegative) return x;
    for (auto& s : step) s /= 2;
  }
}

}  // namespace

GalePair gale_pair_from_recipe(const AffineSubspace& l, std::size_t sample_count, std::uint64_t seed) {
  for (const auto& x : l.base()) {
    if (x <= 0) throw std::invalid_argument("gale_pair_from_recipe: base point is not strictly positive");
  }
  AffineSubspace dual = dual_subspace(l);
  GalePair pair{l, dual, describe_orthant_section(l), describe_orthant_section(dual), 0, true};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < sample_count; ++s) {
    const RationalVector x = sample_near_base(l, rng);
    const RationalVector y = sample_near_base(dual, rng);
    ++pair.samples_checked;
    const bool ok = pair.primal.contains(x) && pair.dual.contains(y) && linalg::dot(x, y) == 1 &&
                    linalg::dot(x, dual.base()) == 1 && linalg::dot(l.base(), y) == 1;
    pair.pairings_ok = pair.pairings_ok && ok;
  }
  return pair;
}

bool GorensteinReport::passed() const {
  if (!unique_interior_point) return false;
  for (const auto& level : levels) {
    if (!level.shift_maps_into || level.interior != level.shifted) return false;
  }
  return true;
}

GorensteinReport gorenstein_check(std::size_t d, unsigned long n_max, const Integer& budget) {
  if (d == 0) throw std::invalid_argument("gorenstein_check: d must be at least 1");
  GorensteinReport report;
  report.d = d;
  const long long dd = static_cast<long long>(d);

  require_enumeration_budget(d, d, budget, "gorenstein_check");
  std::vector<SquareMatrix<long long>> interior;
  for_each_small_g_matrix(d, 1, dd, dd, [&](const SquareMatrix<long long>& a) { interior.push_back(a); });
  report.unique_interior_point = interior.size() == 1 && interior.front() == SquareMatrix<long long>::ones(d);

  for (unsigned long n = d; n <= n_max; ++n) {
    require_enumeration_budget(d, n, budget, "gorenstein_check");
    GorensteinReport::Level level{n, 0, 0, true};
    std::uint64_t count = 0;
    const long long target = static_cast<long long>(n) - dd;
    for_each_small_g_matrix(d, 1, static_cast<long long>(n), static_cast<long long>(n),
                            [&](const SquareMatrix<long long>& a) {
                              ++count;
                              SquareMatrix<long long> shifted = a - SquareMatrix<long long>::ones(d);
                              auto v = g_matrix_value(shifted);
                              if (!v || *v != target) level.shift_maps_into = false;
                            });
    level.interior = Integer(std::to_string(count));
    level.shifted = g_bruteforce(d, n - d, budget);
    report.levels.push_back(std::move(level));
  }
  return report;
}

CompressedReport compressed_check(std::size_t d, std::size_t sample_count, std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("compressed_check: d must be at least 1");
  CompressedReport report;
  report.d = d;
  std::mt19937_64 rng(seed);

  report.vertices_in_cube = true;
  for (const auto& v : all_vertices(d)) {
    const RationalMatrix m = vertex_matrix(v).cast<Rational>();
    report.vertices_in_cube = report.vertices_in_cube && in_unit_cube(m);
  }
  for (std::size_t k = 0; k < 8; ++k) {
    const RationalMatrix p = permutation_matrix(random_permutation(d, rng)).cast<Rational>();
    report.vertices_in_cube = report.vertices_in_cube && in_unit_cube(p);
  }

  for (std::size_t s = 0; s < sample_count; ++s) {
    // Hull direction of G_d: an addition table whose labels sum to zero.
    RationalMatrix x = random_gardner_point(d, rng);
    std::vector<Rational> lambda(d), mu(d);
    Rational total = 0;
    for (std::size_t k = 0; k < d; ++k) {
      lambda[k] = random_rational(rng, 1000, 1000) / 1000;
      mu[k] = random_rational(rng, 1000, 1000) / 1000;
      total += lambda[k] + mu[k];
    }
    mu[0] -= total;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) x(i, j) += mu[i] + lambda[j];
    }
    const auto check = is_g_matrix_fast(x);
    const bool member = check.value && *check.value == 1;
    if (in_unit_cube(x)) {
      ++report.g_accepted;
      if (!member) report.counterexamples.push_back(describe("hull point in cube outside G_d", x));
    } else {
      ++report.g_outside_cube;
      if (member) report.counterexamples.push_back(describe("hull point outside cube inside G_d", x));
    }

    // Hull direction of B_d: +t at (a,b), (e,c); -t at (a,c), (e,b).
    RationalMatrix y = random_birkhoff_point(d, rng);
    if (d >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, d - 1);
      const std::size_t a = pick(rng), b = pick(rng);
      const std::size_t e = (a + 1 + pick(rng) % (d - 1)) % d;
      const std::size_t c = (b + 1 + pick(rng) % (d - 1)) % d;
      const Rational t = random_rational(rng, 1000, 1000) / 1000;
      y(a, b) += t;
      y(e, c) += t;
      y(a, c) -= t;
      y(e, b) -= t;
    }
    const bool stochastic = is_doubly_stochastic(y);
    if (in_unit_cube(y)) {
      ++report.b_accepted;
      if (!stochastic) report.counterexamples.push_back(describe("hull point in cube outside B_d", y));
    } else {
      ++report.b_outside_cube;
      if (stochastic) report.counterexamples.push_back(describe("hull point outside cube inside B_d", y));
    }
  }
  return report;
}

}  // namespace gardner
