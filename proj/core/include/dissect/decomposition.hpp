#pragma once

// Vertex-decomposition certificates: search and independent verification.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "dissect/simplicial.hpp"

namespace dissect {

// A recursive witness of vertex decomposability. A leaf stands for a
// simplex (or {emptyset}); a node names the shedding vertex v and carries
// certificates for the deletion of v and the link of v.
class DecompositionCertificate {
 public:
  DecompositionCertificate() = default;  // leaf
  static DecompositionCertificate node(Vertex v, DecompositionCertificate deletion, DecompositionCertificate link);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  Vertex vertex() const;
  const DecompositionCertificate& deletion() const;
  const DecompositionCertificate& link() const;

  // Distinct nodes reachable from this one (subtrees may be shared).
  std::size_t node_count() const;
  // Same shape with every vertex passed through f.
  template <typename F>
  DecompositionCertificate map_vertices(F&& f) const;

  bool same_node(const DecompositionCertificate& other) const noexcept { return node_ == other.node_; }

 private:
  struct Node;
  explicit DecompositionCertificate(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct DecompositionCertificate::Node {
  Vertex vertex;
  DecompositionCertificate deletion;
  DecompositionCertificate link;
};

template <typename F>
DecompositionCertificate DecompositionCertificate::map_vertices(F&& f) const {
  if (is_leaf()) return {};
  DecompositionCertificate del = node_->deletion.map_vertices(f);
  DecompositionCertificate lk =
      node_->link.same_node(node_->deletion) ? del : node_->link.map_vertices(f);
  return node(f(node_->vertex), std::move(del), std::move(lk));
}

struct DecompositionSearchOptions {
  // Vertices listed here are tried first, in this order; the rest follow
  // in increasing order.
  std::vector<Vertex> priority;
  // Maximum number of memoized subproblems before ResourceLimitError.
  std::size_t memo_limit = 1u << 20;
};

struct DecompositionResult {
  std::optional<DecompositionCertificate> certificate;
  // A facet of smaller dimension, when the input is not pure.
  std::optional<Simplex> impure_witness;
  std::size_t memo_entries = 0;

  bool found() const noexcept { return certificate.has_value(); }
};

// Exhaustive search with memoization on canonical facet lists.
DecompositionResult find_vertex_decomposition(const AbstractComplex& complex,
                                              const DecompositionSearchOptions& options = {});

// Recomputes every deletion and link and checks the purity and dimension
// conditions at each node without reference to the search.
bool verify_vertex_decomposition(const AbstractComplex& complex, const DecompositionCertificate& certificate);

}  // namespace dissect
