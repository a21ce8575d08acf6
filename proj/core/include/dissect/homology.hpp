#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dissect/simplicial.hpp"

namespace dissect {

// Signed boundary map from k-faces (columns) to (k-1)-faces (rows), both in
// lexicographic order. Degree 0 maps vertices onto the empty face, so the
// homology computed from these maps is reduced homology.
struct BoundaryMatrix {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Nonzero entries of each column as (row, +-1), rows increasing.
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

BoundaryMatrix boundary_matrix(const std::vector<std::vector<Simplex>>& faces_by_size, int degree);
BoundaryMatrix boundary_matrix(const AbstractComplex& complex, int degree);

// Rank over the rationals, by fraction-free integer column elimination.
std::size_t rank(const BoundaryMatrix& matrix);

// True iff lower * upper is the zero matrix (lower has degree k-1, upper k).
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

struct ReducedHomology {
  // Reduced Betti number in degree -1; nonzero only for {emptyset}.
  std::size_t degree_minus_one = 0;
  // betti[k] for k = 0..dim.
  std::vector<std::size_t> betti;

  // sum_k (-1)^k betti_k, including degree -1.
  std::int64_t euler_characteristic() const;
};

ReducedHomology reduced_homology(const AbstractComplex& complex, std::uint64_t face_limit = 10'000'000);

}  // namespace dissect
