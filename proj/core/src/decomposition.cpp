#include "dissect/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dissect/errors.hpp"

namespace dissect {

DecompositionCertificate DecompositionCertificate::node(Vertex v, DecompositionCertificate deletion,
                                                        DecompositionCertificate link) {
  return DecompositionCertificate(std::make_shared<const Node>(Node{v, std::move(deletion), std::move(link)}));
}

Vertex DecompositionCertificate::vertex() const {
  if (!node_) throw std::logic_error("leaf certificate has no vertex");
  return node_->vertex;
}

const DecompositionCertificate& DecompositionCertificate::deletion() const {
  if (!node_) throw std::logic_error("leaf certificate has no deletion branch");
  return node_->deletion;
}

const DecompositionCertificate& DecompositionCertificate::link() const {
  if (!node_) throw std::logic_error("leaf certificate has no link branch");
  return node_->link;
}

std::size_t DecompositionCertificate::node_count() const {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack;
  if (node_) stack.push_back(node_.get());
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->deletion.node_) stack.push_back(n->deletion.node_.get());
    if (n->link.node_) stack.push_back(n->link.node_.get());
  }
  return seen.size();
}

namespace {

bool is_base_case(const AbstractComplex& complex) { return complex.facets().size() <= 1; }

class Searcher {
 public:
  explicit Searcher(const DecompositionSearchOptions& options) : limit_(options.memo_limit) {
    for (std::size_t i = 0; i < options.priority.size(); ++i) rank_.emplace(options.priority[i], i);
  }

  std::optional<DecompositionCertificate> solve(const AbstractComplex& complex) {
    if (is_base_case(complex)) return DecompositionCertificate{};

    const std::vector<Vertex> verts = complex.vertices();
    auto key = canonical_key(complex);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (!it->second.certificate) return std::nullopt;
      return relabel(*it->second.certificate, it->second.vertices, verts);
    }

    std::optional<DecompositionCertificate> found = search(complex, verts);
    if (memo_.size() >= limit_) {
      throw ResourceLimitError("vertex-decomposition memo table exceeded " + std::to_string(limit_) + " entries",
                               memo_.size() + 1, limit_);
    }
    memo_.emplace(std::move(key), Entry{verts, found});
    return found;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    std::vector<Vertex> vertices;
    std::optional<DecompositionCertificate> certificate;
  };

  std::optional<DecompositionCertificate> search(const AbstractComplex& complex, std::vector<Vertex> candidates) {
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex x, Vertex y) { return rank(x) < rank(y); });
    const int dim = complex.dimension();
    for (Vertex v : candidates) {
      const bool is_cone = complex.is_cone_over(v);
      AbstractComplex del = deletion(complex, v);
      if (!is_cone && (!del.is_pure() || del.dimension() != dim)) continue;
      const AbstractComplex lk = link(complex, v);
      auto link_cert = solve(lk);
      if (!link_cert) continue;
      if (is_cone) return DecompositionCertificate::node(v, *link_cert, *link_cert);
      auto del_cert = solve(del);
      if (!del_cert) continue;
      return DecompositionCertificate::node(v, std::move(*del_cert), std::move(*link_cert));
    }
    return std::nullopt;
  }

  std::size_t rank(Vertex v) const {
    auto it = rank_.find(v);
    return it == rank_.end() ? rank_.size() : it->second;
  }

  static DecompositionCertificate relabel(const DecompositionCertificate& cert, const std::vector<Vertex>& from,
                                          const std::vector<Vertex>& to) {
    if (from == to) return cert;
    return cert.map_vertices([&](Vertex v) {
      auto it = std::lower_bound(from.begin(), from.end(), v);
      return to[static_cast<std::size_t>(it - from.begin())];
    });
  }

  std::unordered_map<Vertex, std::size_t> rank_;
  std::map<std::vector<Simplex>, Entry> memo_;
  std::size_t limit_;
};

std::optional<Simplex> impurity_witness(const AbstractComplex& complex) {
  if (complex.is_pure()) return std::nullopt;
  const auto& facets = complex.facets();
  auto smallest = std::min_element(facets.begin(), facets.end(),
                                   [](const Simplex& x, const Simplex& y) { return x.size() < y.size(); });
  return *smallest;
}

}  // namespace

DecompositionResult find_vertex_decomposition(const AbstractComplex& complex,
                                              const DecompositionSearchOptions& options) {
  DecompositionResult result;
  if (auto witness = impurity_witness(complex)) {
    result.impure_witness = std::move(witness);
    return result;
  }
  Searcher searcher(options);
  result.certificate = searcher.solve(complex);
  result.memo_entries = searcher.memo_size();
  return result;
}

bool verify_vertex_decomposition(const AbstractComplex& complex, const DecompositionCertificate& certificate) {
  if (!complex.is_pure()) return false;
  if (certificate.is_leaf()) return is_base_case(complex);

  const Vertex v = certificate.vertex();
  const std::vector<Vertex> verts = complex.vertices();
  if (!std::binary_search(verts.begin(), verts.end(), v)) return false;

  const AbstractComplex lk = link(complex, v);
  const AbstractComplex del = deletion(complex, v);
  if (!del.is_pure() || lk.dimension() != complex.dimension() - 1) return false;
  if (complex.is_cone_over(v)) {
    // del and lk have the same facets here.
    if (certificate.deletion().same_node(certificate.link())) {
      return verify_vertex_decomposition(lk, certificate.link());
    }
  } else if (del.dimension() != complex.dimension()) {
    return false;
  }
  return verify_vertex_decomposition(del, certificate.deletion()) &&
         verify_vertex_decomposition(lk, certificate.link());
}

}  // namespace dissect
