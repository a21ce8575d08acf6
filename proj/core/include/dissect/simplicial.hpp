#pragma once

// Abstract simplicial complexes stored by their facets.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dissect {

using Vertex = std::int32_t;
// Sorted, duplicate-free vertex list.
using Simplex = std::vector<Vertex>;

Simplex make_simplex(std::vector<Vertex> vertices);
bool is_subset(std::span<const Vertex> small, std::span<const Vertex> large);

class AbstractComplex {
 public:
  // The void complex: no faces at all.
  AbstractComplex() = default;
  // Keeps only the inclusion-maximal sets. The ground set defaults to the
  // union of the facets and is extended to contain it.
  explicit AbstractComplex(std::vector<Simplex> facets, std::vector<Vertex> ground = {});

  // {emptyset}
  static AbstractComplex empty_face_only();
  static AbstractComplex simplex(Simplex vertices);

  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::vector<Vertex>& ground() const noexcept { return ground_; }
  // Vertices that lie in some facet.
  std::vector<Vertex> vertices() const;

  bool is_void() const noexcept { return facets_.empty(); }
  // -1 for {emptyset}; -2 for the void complex.
  int dimension() const;
  bool is_pure() const;
  bool contains_face(std::span<const Vertex> face) const;
  bool is_cone_over(Vertex v) const;

  // All faces grouped by cardinality 0..dim+1, each group sorted.
  std::vector<std::vector<Simplex>> faces_by_size(std::uint64_t face_limit = 10'000'000) const;
  std::vector<std::uint64_t> f_vector(std::uint64_t face_limit = 10'000'000) const;

  friend bool operator==(const AbstractComplex& x, const AbstractComplex& y) {
    return x.facets_ == y.facets_;
  }

 private:
  std::vector<Simplex> facets_;
  std::vector<Vertex> ground_;
};

// Faces disjoint from removed.
AbstractComplex deletion(const AbstractComplex& complex, std::span<const Vertex> removed);
AbstractComplex deletion(const AbstractComplex& complex, Vertex v);
// {B : B disjoint from face, B union face in complex}; throws NotAFaceError.
AbstractComplex link(const AbstractComplex& complex, std::span<const Vertex> face);
AbstractComplex link(const AbstractComplex& complex, Vertex v);
// Throws GroundSetOverlapError when the ground sets intersect.
AbstractComplex join(const AbstractComplex& c1, const AbstractComplex& c2);
AbstractComplex cone(const AbstractComplex& complex, Vertex apex);

// Facets relabeled to 0..k-1 in increasing vertex order; equal keys mean
// the complexes agree up to an order-preserving relabeling.
std::vector<Simplex> canonical_key(const AbstractComplex& complex);

std::string to_string(const Simplex& simplex);

}  // namespace dissect
