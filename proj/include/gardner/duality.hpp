#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gardner/affine_subspace.hpp"
#include "gardner/counting.hpp"
#include "gardner/g_matrix.hpp"

namespace gardner {

/// (P_sigma)_ij = 1 iff sigma(i) = j.
IntMatrix permutation_matrix(const Permutation& sigma);

/// Nonnegative with every row and column summing to exactly 1.
template <class T>
bool is_doubly_stochastic(const SquareMatrix<T>& b) {
  const std::size_t d = b.size();
  for (const auto& x : b.entries()) {
    if (x < 0) return false;
  }
  for (std::size_t i = 0; i < d; ++i) {
    T row(0), col(0);
    for (std::size_t j = 0; j < d; ++j) {
      row += b(i, j);
      col += b(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

/// <A, B> = tr(A^T B).
template <class T>
T pairing(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing: dimension mismatch");
  T s(0);
  for (std::size_t k = 0; k < a.entries().size(); ++k) s += a.entries()[k] * b.entries()[k];
  return s;
}

/// Row-major flattening, for the subspace machinery.
linalg::RationalVector flatten(const RationalMatrix& m);
RationalMatrix unflatten(const linalg::RationalVector& v, std::size_t d);

/// Affine hull of G_d: sum of entries d and every 2x2 exchange condition.
AffineSubspace gardner_affine_hull(std::size_t d);
/// Affine hull of B_d: all row and column sums 1.
AffineSubspace birkhoff_affine_hull(std::size_t d);

struct GalePairReport {
  std::size_t d = 0;
  std::size_t vertex_pairings = 0;        ///< <v_G, P_sigma> evaluated
  std::size_t g_samples = 0;              ///< matrices tested against the P_sigma description
  std::size_t b_samples = 0;              ///< matrices tested against the R_i, C_j description
  std::size_t perturbation_witnesses = 0; ///< perturbed G-matrices caught by some P_sigma
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// Checks that G_d and B_d are each cut out by the other's vertices: every
/// vertex pairing is 1, and on random nonnegative rational matrices the two
/// descriptions of each polytope agree. Throws GuardExceeded for
/// d > max_side.
GalePairReport gale_pair_check(std::size_t d, std::size_t sample_count, std::uint64_t seed,
                               std::size_t max_side = kDefaultFactorialGuard);

/// H-description R^D_{>=0} cap {x : a x = b}.
struct PolyhedronDescription {
  linalg::RationalDense equations;
  linalg::RationalVector rhs;

  bool contains(const linalg::RationalVector& x) const;
};

struct GalePair {
  AffineSubspace primal_hull;  ///< L
  AffineSubspace dual_hull;    ///< L-dagger
  PolyhedronDescription primal;
  PolyhedronDescription dual;
  std::size_t samples_checked = 0;
  bool pairings_ok = true;
};

/// P = R^D_{>=0} cap L and Q = R^D_{>=0} cap L-dagger for a base point with
/// all coordinates positive. Samples points of P and Q near their base
/// points and checks that they pair to 1. Throws std::invalid_argument if
/// the normalized base point is not strictly positive.
GalePair gale_pair_from_recipe(const AffineSubspace& l, std::size_t sample_count = 32,
                               std::uint64_t seed = 1);

struct GorensteinReport {
  std::size_t d = 0;
  bool unique_interior_point = false;  ///< interior of d * G_d is {J}
  struct Level {
    unsigned long n;
    Integer interior;  ///< interior lattice points of n * G_d
    Integer shifted;   ///< lattice points of (n - d) * G_d
    bool shift_maps_into = true;
  };
  std::vector<Level> levels;

  bool passed() const;
};

/// For N = d, ..., n_max: A -> A - J sends interior lattice points of N*G_d
/// into (N-d)*G_d, and both sides have the same count.
GorensteinReport gorenstein_check(std::size_t d, unsigned long n_max,
                                  const Integer& budget = kDefaultEnumerationBudget);

struct CompressedReport {
  std::size_t d = 0;
  bool vertices_in_cube = false;
  std::size_t g_accepted = 0;      ///< hull points inside the cube, all G-matrices of value 1
  std::size_t g_outside_cube = 0;  ///< hull points rejected for leaving the cube
  std::size_t b_accepted = 0;
  std::size_t b_outside_cube = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return vertices_in_cube && counterexamples.empty(); }
};

/// Samples rational points of the affine hulls of G_d and B_d; those in the
/// unit cube must lie in the polytope, those outside must fail membership.
CompressedReport compressed_check(std::size_t d, std::size_t sample_count, std::uint64_t seed);

}  // namespace gardner
