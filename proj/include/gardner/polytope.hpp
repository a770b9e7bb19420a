#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gardner/g_matrix.hpp"
#include "gardner/linalg.hpp"

namespace gardner {

enum class VertexKind { Col, Row };

/// R_i (all ones in row i) or C_j (all ones in column j) of G_d; index is
/// one-based. Vertices order as C_1..C_d, R_1..R_d.
struct Vertex {
  VertexKind kind;
  std::size_t index;
  std::size_t d;

  static Vertex row(std::size_t i, std::size_t d) { return {VertexKind::Row, i, d}; }
  static Vertex col(std::size_t j, std::size_t d) { return {VertexKind::Col, j, d}; }

  /// Position in the ordering C_1..C_d, R_1..R_d, zero-based.
  std::size_t ordinal() const { return (kind == VertexKind::Col ? 0 : d) + index - 1; }
  std::string name() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) { return a.ordinal() <=> b.ordinal(); }
};

/// All 2d vertices in the canonical order.
std::vector<Vertex> all_vertices(std::size_t d);

/// Materializes R_i or C_j. Throws std::out_of_range for an index outside [d].
IntMatrix vertex_matrix(const Vertex& v);

/// A simplex spanned by a proper subset of the vertices of G_d. Any proper
/// subset is affinely independent, since the only affine dependence is
/// R_1 + ... + R_d = C_1 + ... + C_d.
class LatticeSimplex {
 public:
  /// Sorts into canonical order. Throws std::invalid_argument on an empty,
  /// repeated, mismatched or complete vertex set.
  LatticeSimplex(std::size_t d, std::vector<Vertex> vertices);

  std::size_t side() const { return d_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t dimension() const { return vertices_.size() - 1; }
  bool contains(const Vertex& v) const;
  std::string to_string() const;

  friend bool operator==(const LatticeSimplex&, const LatticeSimplex&) = default;

 private:
  std::size_t d_;
  std::vector<Vertex> vertices_;
};

/// H_U P: the points of P whose coefficients on the vertices in U are
/// strictly positive.
class HalfOpenSimplex {
 public:
  HalfOpenSimplex(LatticeSimplex simplex, std::vector<Vertex> excluded);

  const LatticeSimplex& simplex() const { return simplex_; }
  const std::vector<Vertex>& excluded() const { return excluded_; }

 private:
  LatticeSimplex simplex_;
  std::vector<Vertex> excluded_;
};

/// Sum R_i = J = Sum C_j.
bool circuit_check(std::size_t d);

template <class T>
struct AffineHullResidual {
  T sum_residual;                    ///< |sum of entries - dilation * d|
  std::vector<Quadruple> violated;  ///< (1, 1, i, j) with A_11 + A_ij != A_1j + A_i1

  bool in_hull() const { return sum_residual == 0 && violated.empty(); }
};

/// Distance of A from the affine hull of dilation * G_d, reported as the
/// entry-sum defect and the failed exchange conditions through row and
/// column 1.
template <class T>
AffineHullResidual<T> affine_hull_residual(const SquareMatrix<T>& a, const T& dilation = T(1)) {
  const std::size_t d = a.size();
  T target = dilation * T(static_cast<long>(d));
  T defect = a.sum() - target;
  AffineHullResidual<T> out{defect < 0 ? T(-defect) : defect, {}};
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = 1; j < d; ++j) {
      if (a(0, 0) + a(i, j) != a(0, j) + a(i, 0)) out.violated.push_back({1, 1, i + 1, j + 1});
    }
  }
  return out;
}

/// Which vertex each maximal cell omits. OmitRow gives P_k = conv(all but
/// R_k), paired with the columns-first decomposition; OmitColumn is the
/// mirror triangulation, paired with rows-first.
enum class TriangulationKind { OmitRow, OmitColumn };

std::vector<LatticeSimplex> triangulation_cells(std::size_t d,
                                                TriangulationKind kind = TriangulationKind::OmitRow);

/// P_i intersect P_j, the common face of two maximal cells.
LatticeSimplex cell_intersection(std::size_t i, std::size_t j, std::size_t d,
                                 TriangulationKind kind = TriangulationKind::OmitRow);

/// Cell k is H_{U_k} P_k with U_k = {R_1, ..., R_{k-1}} (columns for the
/// mirror triangulation). These partition G_d.
std::vector<HalfOpenSimplex> halfopen_cells(std::size_t d,
                                            TriangulationKind kind = TriangulationKind::OmitRow);

/// One-based index of the half-open cell containing g: the first zero row
/// label of the canonical decomposition.
std::size_t locate(const GMatrix& g, TriangulationKind kind = TriangulationKind::OmitRow);

/// Weights w_v >= 0 with sum_v w_v V_v = point and sum_v w_v = dilation, or
/// nothing when the point is outside dilation * cell.
std::optional<linalg::RationalVector> dilated_coefficients(const RationalMatrix& point,
                                                           const Rational& dilation,
                                                           const LatticeSimplex& cell);

/// Convex coefficients of g / value(g) with respect to the cell vertices,
/// or nothing when the point lies outside the cell. Throws
/// std::domain_error for a zero-value matrix.
template <class T>
std::optional<linalg::RationalVector> barycentric(const BasicGMatrix<T>& g, const LatticeSimplex& cell) {
  if (g.value() == 0) throw std::domain_error("barycentric: G-matrix of value 0 has no normalization");
  const Rational value(g.value());
  auto w = dilated_coefficients(g.matrix().template cast<Rational>(), value, cell);
  if (!w) return std::nullopt;
  for (auto& x : *w) x /= value;
  return w;
}

/// Membership of g in value(g) * H_U P: all weights nonnegative, weights on
/// U strictly positive. At value 0 only cells with empty U contain the
/// origin.
bool halfopen_contains(const HalfOpenSimplex& cell, const GMatrix& g);

/// pi(A) = (r_2, ..., r_d, c_2 - c_1, ..., c_d - c_1) for first row r and
/// first column c. Sends C_j to e_{j-1} (e_0 = 0) and R_{i+1} to e_{d-1+i}.
/// Throws std::invalid_argument for d = 1.
template <class T>
std::vector<T> project_pi(const SquareMatrix<T>& a) {
  const std::size_t d = a.size();
  if (d < 2) throw std::invalid_argument("project_pi: requires d >= 2");
  std::vector<T> out;
  out.reserve(2 * d - 2);
  for (std::size_t j = 1; j < d; ++j) out.push_back(a(0, j));
  for (std::size_t i = 1; i < d; ++i) out.push_back(a(i, 0) - a(0, 0));
  return out;
}

/// |det| = 1 for the projected edge vectors of a maximal cell. Throws
/// std::invalid_argument ("degenerate cell") unless the cell has 2d - 1
/// vertices.
bool unimodularity_check(const LatticeSimplex& cell);

/// Exact determinant behind unimodularity_check.
Integer cell_determinant(const LatticeSimplex& cell);

}  // namespace gardner
