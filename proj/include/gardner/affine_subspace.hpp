#pragma once

#include <cstddef>
#include <vector>

#include "gardner/linalg.hpp"

namespace gardner {

/// L = q + span(U) over the rationals, stored in normal form: q is
/// orthogonal to U and the direction basis is in reduced row echelon form.
/// Two subspaces are equal iff their normal forms are.
class AffineSubspace {
 public:
  /// Throws std::invalid_argument if the directions are linearly dependent
  /// or have the wrong length.
  AffineSubspace(linalg::RationalVector point, std::vector<linalg::RationalVector> directions);

  /// Like the constructor, but reduces a spanning set to a basis first.
  static AffineSubspace from_spanning_set(linalg::RationalVector point,
                                          const std::vector<linalg::RationalVector>& spanning);

  /// {x : a x = b}. Throws std::invalid_argument if the system is
  /// inconsistent.
  static AffineSubspace from_equations(const linalg::RationalDense& a, const linalg::RationalVector& b);

  /// Smallest affine subspace through the given points (at least one).
  static AffineSubspace affine_hull(const std::vector<linalg::RationalVector>& points);

  std::size_t ambient_dimension() const { return base_.size(); }
  std::size_t dimension() const { return directions_.size(); }
  const linalg::RationalVector& base() const { return base_; }
  const std::vector<linalg::RationalVector>& directions() const { return directions_; }

  bool contains(const linalg::RationalVector& x) const;
  bool contains_origin() const;
  /// A basis of the orthogonal complement of the direction space.
  std::vector<linalg::RationalVector> normals() const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  AffineSubspace() = default;
  void normalize();

  linalg::RationalVector base_;
  std::vector<linalg::RationalVector> directions_;
};

/// L^dagger = {y : <x, y> = 1 for all x in L} = q/|q|^2 + (U^perp cap q^perp).
/// Throws std::domain_error when 0 lies in L (L^dagger is empty).
AffineSubspace dual_subspace(const AffineSubspace& l);

}  // namespace gardner
