#include "dissect/simplicial.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "dissect/errors.hpp"

namespace dissect {

Simplex make_simplex(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> large) {
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

AbstractComplex::AbstractComplex(std::vector<Simplex> facets, std::vector<Vertex> ground) {
  for (auto& f : facets) f = make_simplex(std::move(f));
  // Larger sets first, so a set only needs checking against kept ones.
  std::sort(facets.begin(), facets.end(), [](const Simplex& x, const Simplex& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  const bool uniform = facets.empty() || facets.front().size() == facets.back().size();
  if (uniform) {
    facets_ = std::move(facets);
  } else {
    // containing[v] marks the kept facets that contain v.
    std::unordered_map<Vertex, boost::dynamic_bitset<>> containing;
    const std::size_t total = facets.size();
    for (auto& f : facets) {
      bool maximal = true;
      if (f.empty()) {
        maximal = facets_.empty();
      } else {
        boost::dynamic_bitset<> common;
        for (Vertex v : f) {
          auto it = containing.find(v);
          if (it == containing.end()) {
            common.clear();
            break;
          }
          if (common.empty()) common = it->second;
          else common &= it->second;
          if (common.none()) break;
        }
        maximal = common.empty() || common.none();
      }
      if (!maximal) continue;
      for (Vertex v : f) {
        auto [it, fresh] = containing.try_emplace(v, total);
        it->second.set(facets_.size());
      }
      facets_.push_back(std::move(f));
    }
  }
  std::sort(facets_.begin(), facets_.end());
  for (const auto& f : facets_) ground.insert(ground.end(), f.begin(), f.end());
  ground_ = make_simplex(std::move(ground));
}

AbstractComplex AbstractComplex::empty_face_only() { return AbstractComplex({Simplex{}}); }

AbstractComplex AbstractComplex::simplex(Simplex vertices) { return AbstractComplex({std::move(vertices)}); }

std::vector<Vertex> AbstractComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& f : facets_) out.insert(out.end(), f.begin(), f.end());
  return make_simplex(std::move(out));
}

int AbstractComplex::dimension() const {
  if (facets_.empty()) return -2;
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool AbstractComplex::is_pure() const {
  if (facets_.empty()) return true;
  const std::size_t size = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.size() == size; });
}

bool AbstractComplex::contains_face(std::span<const Vertex> face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return is_subset(face, f); });
}

bool AbstractComplex::is_cone_over(Vertex v) const {
  return !facets_.empty() && std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return std::binary_search(f.begin(), f.end(), v);
  });
}

std::vector<std::vector<Simplex>> AbstractComplex::faces_by_size(std::uint64_t face_limit) const {
  const int dim = dimension();
  if (dim < -1) return {};
  std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(dim) + 2);
  std::uint64_t budget = 0;
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    if (k >= 63) throw ResourceLimitError("facet too large to expand into faces", ~0ull, face_limit);
    budget += std::uint64_t{1} << k;
    if (budget > face_limit * 64) {
      throw ResourceLimitError("face expansion exceeds the configured limit", budget, face_limit);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) s.push_back(f[i]);
      }
      out[s.size()].push_back(std::move(s));
    }
  }
  std::uint64_t total = 0;
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    total += list.size();
  }
  if (total > face_limit) throw ResourceLimitError("complex has more faces than the limit", total, face_limit);
  return out;
}

std::vector<std::uint64_t> AbstractComplex::f_vector(std::uint64_t face_limit) const {
  std::vector<std::uint64_t> f;
  for (const auto& list : faces_by_size(face_limit)) f.push_back(list.size());
  return f;
}

AbstractComplex deletion(const AbstractComplex& complex, std::span<const Vertex> removed) {
  const Simplex gone = make_simplex({removed.begin(), removed.end()});
  if (complex.is_void()) return {};
  std::vector<Simplex> facets;
  facets.reserve(complex.facets().size());
  for (const auto& f : complex.facets()) {
    Simplex kept;
    std::set_difference(f.begin(), f.end(), gone.begin(), gone.end(), std::back_inserter(kept));
    facets.push_back(std::move(kept));
  }
  std::vector<Vertex> ground;
  std::set_difference(complex.ground().begin(), complex.ground().end(), gone.begin(), gone.end(),
                      std::back_inserter(ground));
  return AbstractComplex(std::move(facets), std::move(ground));
}

AbstractComplex deletion(const AbstractComplex& complex, Vertex v) {
  const Vertex one[] = {v};
  return deletion(complex, one);
}

AbstractComplex link(const AbstractComplex& complex, std::span<const Vertex> face) {
  const Simplex a = make_simplex({face.begin(), face.end()});
  std::vector<Simplex> facets;
  for (const auto& f : complex.facets()) {
    if (!is_subset(a, f)) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), a.begin(), a.end(), std::back_inserter(rest));
    facets.push_back(std::move(rest));
  }
  if (facets.empty()) throw NotAFaceError(to_string(a) + " is not a face of the complex");
  std::vector<Vertex> ground;
  std::set_difference(complex.ground().begin(), complex.ground().end(), a.begin(), a.end(),
                      std::back_inserter(ground));
  return AbstractComplex(std::move(facets), std::move(ground));
}

AbstractComplex link(const AbstractComplex& complex, Vertex v) {
  const Vertex one[] = {v};
  return link(complex, one);
}

AbstractComplex join(const AbstractComplex& c1, const AbstractComplex& c2) {
  Simplex overlap;
  std::set_intersection(c1.ground().begin(), c1.ground().end(), c2.ground().begin(), c2.ground().end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) throw GroundSetOverlapError("join of complexes sharing vertices " + to_string(overlap));
  std::vector<Simplex> facets;
  for (const auto& f1 : c1.facets()) {
    for (const auto& f2 : c2.facets()) {
      Simplex f = f1;
      f.insert(f.end(), f2.begin(), f2.end());
      facets.push_back(std::move(f));
    }
  }
  std::vector<Vertex> ground = c1.ground();
  ground.insert(ground.end(), c2.ground().begin(), c2.ground().end());
  return AbstractComplex(std::move(facets), std::move(ground));
}

AbstractComplex cone(const AbstractComplex& complex, Vertex apex) {
  return join(complex, AbstractComplex::simplex({apex}));
}

std::vector<Simplex> canonical_key(const AbstractComplex& complex) {
  const std::vector<Vertex> verts = complex.vertices();
  std::unordered_map<Vertex, Vertex> dense;
  dense.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) dense.emplace(verts[i], static_cast<Vertex>(i));
  std::vector<Simplex> key;
  key.reserve(complex.facets().size());
  for (const auto& f : complex.facets()) {
    Simplex s;
    s.reserve(f.size());
    for (Vertex v : f) s.push_back(dense.at(v));
    key.push_back(std::move(s));
  }
  return key;
}

std::string to_string(const Simplex& simplex) {
  std::string out = "{";
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(simplex[i]);
  }
  return out + "}";
}

}  // namespace dissect
