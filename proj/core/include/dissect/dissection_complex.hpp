#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dissect/face.hpp"
#include "dissect/params.hpp"
#include "dissect/polygon.hpp"

namespace dissect {

class AbstractComplex;

inline constexpr std::uint64_t kDefaultFaceLimit = 10'000'000;

struct EnumerationOptions {
  // Largest face cardinality to list; defaults to the facet size.
  std::optional<int> up_to;
  std::uint64_t face_limit = kDefaultFaceLimit;
  // Top-level branches are split across this many worker threads.
  unsigned threads = 1;
};

// Faces grouped by cardinality 0..up_to, each list in canonical order.
struct FaceTable {
  std::vector<std::vector<Face>> by_size;

  std::uint64_t total() const;
};

struct PurityReport {
  bool pure = true;
  // A maximal face smaller than a facet, when impure.
  std::optional<Face> witness;
};

// The generalized cluster complex of m-divisible dissections, materialized
// as its vertex list and compatibility graph. Faces are the cliques of that
// graph.
class DissectionComplex {
 public:
  explicit DissectionComplex(ComplexParams params);

  const ComplexParams& params() const noexcept { return params_; }
  const std::vector<Diagonal>& vertices() const noexcept { return vertices_; }
  bool compatible(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }

  // Position of d in vertices(), or nullopt if it is not a valid diagonal.
  std::optional<std::size_t> index_of(const Diagonal& d) const;
  std::vector<std::size_t> indices_of(const Face& face) const;
  Face face_from_indices(std::span<const std::size_t> indices) const;

  // Throws ResourceLimitError when the closed-form face count up to the
  // requested cardinality exceeds options.face_limit.
  FaceTable enumerate_faces(const EnumerationOptions& options = {}) const;

  // Faces as sorted vertex-index lists, grouped by cardinality.
  std::vector<std::vector<std::vector<std::size_t>>> enumerate_index_faces(
      const EnumerationOptions& options = {}) const;

  std::vector<Face> facets(std::uint64_t face_limit = kDefaultFaceLimit) const;
  PurityReport check_pure(std::uint64_t face_limit = kDefaultFaceLimit) const;
  std::vector<std::uint64_t> f_vector_enumerated(std::uint64_t face_limit = kDefaultFaceLimit) const;

  // Facets as an abstract complex on the vertex indices 0..V-1.
  AbstractComplex to_abstract(std::uint64_t face_limit = kDefaultFaceLimit) const;

  // Vertex indices in a shedding order that works for these complexes:
  // diagonals at the corners cut off by a minimal diagonal, corner by corner,
  // each group ordered clockwise by the far endpoint; then the rest.
  std::vector<std::size_t> shedding_priority() const;

 private:
  ComplexParams params_;
  std::vector<Diagonal> vertices_;
  std::vector<boost::dynamic_bitset<>> adjacency_;
};

// All valid diagonals for params in canonical order.
std::vector<Diagonal> vertex_set(const ComplexParams& params);

// Closed-form number of faces with at most max_size diagonals.
std::uint64_t projected_face_count(const ComplexParams& params, int max_size);

// Vertex counts of the regions cut out by the face's chords, traced
// independently of the validity predicates.
std::vector<int> region_sizes(const Face& face);

}  // namespace dissect
