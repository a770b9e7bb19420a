#include "gardner/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gardner {

std::string Vertex::name() const {
  return (kind == VertexKind::Row ? "R" : "C") + std::to_string(index);
}

std::vector<Vertex> all_vertices(std::size_t d) {
  std::vector<Vertex> out;
  out.reserve(2 * d);
  for (std::size_t j = 1; j <= d; ++j) out.push_back(Vertex::col(j, d));
  for (std::size_t i = 1; i <= d; ++i) out.push_back(Vertex::row(i, d));
  return out;
}

IntMatrix vertex_matrix(const Vertex& v) {
  if (v.index < 1 || v.index > v.d) {
    throw std::out_of_range("vertex_matrix: index " + std::to_string(v.index) + " outside [1, " +
                            std::to_string(v.d) + "]");
  }
  IntMatrix m(v.d);
  for (std::size_t k = 0; k < v.d; ++k) {
    if (v.kind == VertexKind::Row) {
      m(v.index - 1, k) = 1;
    } else {
      m(k, v.index - 1) = 1;
    }
  }
  return m;
}

LatticeSimplex::LatticeSimplex(std::size_t d, std::vector<Vertex> vertices)
    : d_(d), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("LatticeSimplex: no vertices");
  for (const auto& v : vertices_) {
    if (v.d != d_ || v.index < 1 || v.index > d_) {
      throw std::invalid_argument("LatticeSimplex: vertex " + v.name() + " does not belong to G_" +
                                  std::to_string(d_));
    }
  }
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("LatticeSimplex: repeated vertex");
  }
  if (vertices_.size() == 2 * d_) {
    throw std::invalid_argument("LatticeSimplex: all 2d vertices form the circuit, not a simplex");
  }
}

bool LatticeSimplex::contains(const Vertex& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string LatticeSimplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < vertices_.size(); ++k) os << (k ? "," : "") << vertices_[k].name();
  os << '}';
  return os.str();
}

HalfOpenSimplex::HalfOpenSimplex(LatticeSimplex simplex, std::vector<Vertex> excluded)
    : simplex_(std::move(simplex)), excluded_(std::move(excluded)) {
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
  for (const auto& v : excluded_) {
    if (!simplex_.contains(v)) {
      throw std::invalid_argument("HalfOpenSimplex: excluded vertex " + v.name() + " not in simplex");
    }
  }
}

bool circuit_check(std::size_t d) {
  IntMatrix rows(d), cols(d);
  for (std::size_t k = 1; k <= d; ++k) {
    rows += vertex_matrix(Vertex::row(k, d));
    cols += vertex_matrix(Vertex::col(k, d));
  }
  const IntMatrix j = IntMatrix::ones(d);
  return rows == j && cols == j;
}

namespace {

Vertex omitted_vertex(std::size_t k, std::size_t d, TriangulationKind kind) {
  return kind == TriangulationKind::OmitRow ? Vertex::row(k, d) : Vertex::col(k, d);
}

std::vector<Vertex> all_but(std::size_t d, const std::vector<Vertex>& omit) {
  std::vector<Vertex> out;
  for (const auto& v : all_vertices(d)) {
    if (std::find(omit.begin(), omit.end(), v) == omit.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<LatticeSimplex> triangulation_cells(std::size_t d, TriangulationKind kind) {
  if (d == 0) throw std::invalid_argument("triangulation_cells: d must be at least 1");
  std::vector<LatticeSimplex> cells;
  for (std::size_t k = 1; k <= d; ++k) {
    cells.emplace_back(d, all_but(d, {omitted_vertex(k, d, kind)}));
  }
  return cells;
}

LatticeSimplex cell_intersection(std::size_t i, std::size_t j, std::size_t d, TriangulationKind kind) {
  if (i == j) throw std::invalid_argument("cell_intersection: cells must be distinct");
  if (i < 1 || j < 1 || i > d || j > d) throw std::out_of_range("cell_intersection: index outside [d]");
  return LatticeSimplex(d, all_but(d, {omitted_vertex(i, d, kind), omitted_vertex(j, d, kind)}));
}

std::vector<HalfOpenSimplex> halfopen_cells(std::size_t d, TriangulationKind kind) {
  std::vector<HalfOpenSimplex> out;
  auto cells = triangulation_cells(d, kind);
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<Vertex> excluded;
    for (std::size_t i = 1; i < k; ++i) excluded.push_back(omitted_vertex(i, d, kind));
    out.emplace_back(std::move(cells[k - 1]), std::move(excluded));
  }
  return out;
}

std::size_t locate(const GMatrix& g, TriangulationKind kind) {
  const bool by_rows = kind == TriangulationKind::OmitRow;
  const Labeling labels = decompose_canonical(
      g, by_rows ? DecompositionOrder::ColumnsFirst : DecompositionOrder::RowsFirst);
  const auto& zeroed = by_rows ? labels.mu() : labels.lambda();
  for (std::size_t k = 0; k < zeroed.size(); ++k) {
    if (zeroed[k] == 0) return k + 1;
  }
  throw InvariantViolation("locate: decomposition left no zero label");
}

std::optional<linalg::RationalVector> dilated_coefficients(const RationalMatrix& point,
                                                           const Rational& dilation,
                                                           const LatticeSimplex& cell) {
  const std::size_t d = cell.side();
  if (point.size() != d) throw std::invalid_argument("dilated_coefficients: dimension mismatch");
  const std::size_t m = cell.size();
  // d^2 coordinate equations plus the weight-sum equation.
  linalg::RationalDense a(d * d + 1, m);
  linalg::RationalVector b(d * d + 1);
  for (std::size_t c = 0; c < m; ++c) {
    const IntMatrix v = vertex_matrix(cell.vertices()[c]);
    for (std::size_t k = 0; k < d * d; ++k) a(k, c) = Rational(v.entries()[k]);
    a(d * d, c) = 1;
  }
  for (std::size_t k = 0; k < d * d; ++k) b[k] = point.entries()[k];
  b[d * d] = dilation;

  auto sol = linalg::solve(a, b);
  if (sol.status == linalg::SolveStatus::Inconsistent) return std::nullopt;
  if (sol.status == linalg::SolveStatus::Underdetermined) {
    throw InvariantViolation("dilated_coefficients: cell vertices are affinely dependent");
  }
  for (const auto& w : sol.x) {
    if (w < 0) return std::nullopt;
  }
  return std::move(sol.x);
}

bool halfopen_contains(const HalfOpenSimplex& cell, const GMatrix& g) {
  auto w = dilated_coefficients(g.matrix().cast<Rational>(), Rational(g.value()), cell.simplex());
  if (!w) return false;
  const auto& verts = cell.simplex().vertices();
  for (std::size_t c = 0; c < verts.size(); ++c) {
    const bool excluded =
        std::find(cell.excluded().begin(), cell.excluded().end(), verts[c]) != cell.excluded().end();
    if (excluded && (*w)[c] <= 0) return false;
  }
  return true;
}

Integer cell_determinant(const LatticeSimplex& cell) {
  const std::size_t d = cell.side();
  if (cell.size() != 2 * d - 1) {
    throw std::invalid_argument("degenerate cell: " + cell.to_string() + " is not full-dimensional");
  }
  if (d == 1) return 1;
  const std::size_t n = 2 * d - 2;
  const auto base = project_pi(vertex_matrix(cell.vertices()[0]));
  linalg::IntegerDense edges(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto p = project_pi(vertex_matrix(cell.vertices()[r + 1]));
    for (std::size_t c = 0; c < n; ++c) edges(r, c) = p[c] - base[c];
  }
  return linalg::determinant(std::move(edges));
}

bool unimodularity_check(const LatticeSimplex& cell) {
  const Integer det = cell_determinant(cell);
  return det == 1 || det == -1;
}

}  // namespace gardner
