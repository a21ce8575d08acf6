#include "dissect/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "dissect/counts.hpp"

namespace dissect {

BoundaryMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& faces_by_size, int degree) {
  BoundaryMatrix matrix;
  matrix.degree = degree;
  const auto k = static_cast<std::size_t>(degree);
  if (k + 1 >= faces_by_size.size()) {
    matrix.rows = k < faces_by_size.size() ? faces_by_size[k].size() : 0;
    return matrix;
  }
  const auto& cells = faces_by_size[k + 1];
  const auto& facets = faces_by_size[k];
  matrix.rows = facets.size();
  matrix.cols = cells.size();
  matrix.columns.resize(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Simplex& cell = cells[c];
    auto& column = matrix.columns[c];
    for (std::size_t i = 0; i < cell.size(); ++i) {
      Simplex boundary = cell;
      boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = std::lower_bound(facets.begin(), facets.end(), boundary);
      column.emplace_back(static_cast<std::size_t>(it - facets.begin()), i % 2 == 0 ? 1 : -1);
    }
    std::sort(column.begin(), column.end());
  }
  return matrix;
}

BoundaryMatrix boundary_matrix(const AbstractComplex& complex, int degree) {
  return boundary_matrix(complex.faces_by_size(), degree);
}

namespace {

using SparseColumn = std::vector<std::pair<std::size_t, BigInt>>;

// a*x - b*y, merged by row.
SparseColumn combine(const BigInt& a, const SparseColumn& x, const BigInt& b, const SparseColumn& y) {
  SparseColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      BigInt v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void normalize(SparseColumn& column) {
  BigInt g = 0;
  for (const auto& [row, v] : column) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [row, v] : column) v /= g;
  }
}

}  // namespace

std::size_t rank(const BoundaryMatrix& matrix) {
  // Pivot on the lowest nonzero row of each column; clear it from later
  // columns with integer cross-multiplication.
  std::unordered_map<std::size_t, SparseColumn> pivots;
  std::size_t r = 0;
  for (const auto& input : matrix.columns) {
    SparseColumn column;
    column.reserve(input.size());
    for (auto [row, v] : input) column.emplace_back(row, v);
    while (!column.empty()) {
      const std::size_t low = column.back().first;
      auto it = pivots.find(low);
      if (it == pivots.end()) {
        pivots.emplace(low, std::move(column));
        ++r;
        break;
      }
      const SparseColumn& pivot = it->second;
      const BigInt a = pivot.back().second;
      const BigInt b = column.back().second;
      column = combine(a, column, b, pivot);
      normalize(column);
    }
  }
  return r;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.cols != upper.rows) return false;
  for (const auto& column : upper.columns) {
    std::unordered_map<std::size_t, long long> acc;
    for (auto [mid, v] : column) {
      for (auto [row, w] : lower.columns[mid]) acc[row] += static_cast<long long>(v) * w;
    }
    for (const auto& [row, total] : acc) {
      if (total != 0) return false;
    }
  }
  return true;
}

std::int64_t ReducedHomology::euler_characteristic() const {
  std::int64_t chi = -static_cast<std::int64_t>(degree_minus_one);
  for (std::size_t k = 0; k < betti.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[k]);
  }
  return chi;
}

ReducedHomology reduced_homology(const AbstractComplex& complex, std::uint64_t face_limit) {
  ReducedHomology out;
  const auto faces = complex.faces_by_size(face_limit);
  if (faces.empty()) return out;  // void complex
  const int dim = static_cast<int>(faces.size()) - 2;
  // ranks[k] = rank of the boundary map out of degree k, k = 0..dim.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim) + 2, 0);
  for (int k = 0; k <= dim; ++k) ranks[static_cast<std::size_t>(k)] = rank(boundary_matrix(faces, k));
  out.degree_minus_one = 1 - (dim >= 0 ? ranks[0] : 0);
  for (int k = 0; k <= dim; ++k) {
    const std::size_t cells = faces[static_cast<std::size_t>(k) + 1].size();
    out.betti.push_back(cells - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1]);
  }
  return out;
}

}  // namespace dissect
