#include "gardner/affine_subspace.hpp"

#include <stdexcept>

namespace gardner {

using linalg::RationalDense;
using linalg::RationalVector;

namespace {

RationalDense stack(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalDense m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("AffineSubspace: vector length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<RationalVector> rows_of(const RationalDense& m) {
  std::vector<RationalVector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace

AffineSubspace::AffineSubspace(RationalVector point, std::vector<RationalVector> directions)
    : base_(std::move(point)), directions_(std::move(directions)) {
  if (base_.empty()) throw std::invalid_argument("AffineSubspace: ambient dimension must be positive");
  if (linalg::rank(stack(directions_, base_.size())) != directions_.size()) {
    throw std::invalid_argument("AffineSubspace: directions are linearly dependent");
  }
  normalize();
}

AffineSubspace AffineSubspace::from_spanning_set(RationalVector point,
                                                 const std::vector<RationalVector>& spanning) {
  const std::size_t dim = point.size();
  AffineSubspace l;
  l.base_ = std::move(point);
  if (!spanning.empty()) l.directions_ = rows_of(linalg::rref(stack(spanning, dim)).reduced);
  l.normalize();
  return l;
}

AffineSubspace AffineSubspace::from_equations(const RationalDense& a, const RationalVector& b) {
  auto sol = linalg::solve(a, b);
  if (sol.status == linalg::SolveStatus::Inconsistent) {
    throw std::invalid_argument("AffineSubspace: inconsistent equations");
  }
  return from_spanning_set(std::move(sol.x), linalg::nullspace(a));
}

AffineSubspace AffineSubspace::affine_hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw std::invalid_argument("AffineSubspace: affine hull of no points");
  std::vector<RationalVector> diffs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    RationalVector v = points[k];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= points[0][c];
    diffs.push_back(std::move(v));
  }
  return from_spanning_set(points[0], diffs);
}

void AffineSubspace::normalize() {
  if (!directions_.empty()) {
    directions_ = rows_of(linalg::rref(stack(directions_, base_.size())).reduced);
  }
  // Replace q by its component orthogonal to U: q - U^T (U U^T)^{-1} U q.
  const std::size_t k = directions_.size();
  if (k == 0) return;
  RationalDense gram(k, k);
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = linalg::dot(directions_[i], directions_[j]);
    rhs[i] = linalg::dot(directions_[i], base_);
  }
  const auto coeff = linalg::solve(gram, rhs);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < base_.size(); ++c) base_[c] -= coeff.x[i] * directions_[i][c];
  }
}

bool AffineSubspace::contains(const RationalVector& x) const {
  if (x.size() != base_.size()) return false;
  RationalVector diff = x;
  for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= base_[c];
  for (const auto& n : normals()) {
    if (linalg::dot(n, diff) != 0) return false;
  }
  return true;
}

bool AffineSubspace::contains_origin() const {
  for (const auto& x : base_) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<RationalVector> AffineSubspace::normals() const {
  if (directions_.empty()) {
    std::vector<RationalVector> out;
    for (std::size_t c = 0; c < base_.size(); ++c) {
      RationalVector e(base_.size(), Rational(0));
      e[c] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  return linalg::nullspace(stack(directions_, base_.size()));
}

AffineSubspace dual_subspace(const AffineSubspace& l) {
  if (l.contains_origin()) throw std::domain_error("dual_subspace: L contains the origin, L-dagger is empty");
  const RationalVector& q = l.base();
  const Rational norm2 = linalg::dot(q, q);
  RationalVector point = q;
  for (auto& x : point) x /= norm2;
  std::vector<RationalVector> constraints = l.directions();
  constraints.push_back(q);
  const auto v = linalg::nullspace(stack(constraints, q.size()));
  return AffineSubspace::from_spanning_set(std::move(point), v);
}

}  // namespace gardner
