#include "dissect/dissection_complex.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "dissect/counts.hpp"
#include "dissect/errors.hpp"
#include "dissect/simplicial.hpp"

namespace dissect {

namespace {

using IndexFace = std::vector<std::size_t>;
using IndexTable = std::vector<std::vector<IndexFace>>;

struct Enumerator {
  const std::vector<boost::dynamic_bitset<>>& adjacency;
  std::size_t max_size;
  IndexTable& out;
  std::uint64_t& emitted;
  std::uint64_t limit;

  void extend(IndexFace& face, const boost::dynamic_bitset<>& candidates, std::size_t after) {
    if (++emitted > limit) {
      throw ResourceLimitError("face enumeration exceeded the limit of " + std::to_string(limit) + " faces",
                               emitted, limit);
    }
    out[face.size()].push_back(face);
    if (face.size() == max_size) return;
    for (std::size_t v = candidates.find_next(after); v != boost::dynamic_bitset<>::npos;
         v = candidates.find_next(v)) {
      face.push_back(v);
      extend(face, candidates & adjacency[v], v);
      face.pop_back();
    }
  }
};

}  // namespace

std::uint64_t FaceTable::total() const {
  std::uint64_t n = 0;
  for (const auto& list : by_size) n += list.size();
  return n;
}

std::vector<Diagonal> vertex_set(const ComplexParams& params) {
  const int size = params.polygon_size();
  const int m = params.m();
  std::vector<Diagonal> out;
  if (params.family() == Family::A) {
    for (int a = 0; a < size; ++a) {
      for (int b = a + 2; b < size; ++b) {
        if (a == 0 && b == size - 1) continue;
        const Chord c = Chord::make(Label{a}, Label{b}, size);
        if (is_valid_a_diagonal(c, m, params.n())) out.push_back(Diagonal::a_chord(c));
      }
    }
  } else {
    const int half = size / 2;
    for (int p = 0; p < half; ++p) out.push_back(Diagonal::b_diameter(Label{p}, size));
    for (int s = 0; s < half; ++s) {
      for (int cut = m + 1; cut < half; cut += m) {
        out.push_back(Diagonal::b_pair(Chord::make(Label{s}, Label{(s + cut) % size}, size)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t projected_face_count(const ComplexParams& params, int max_size) {
  const FVector f = closed_form_f(params);
  BigInt total = 0;
  for (int i = 0; i <= std::min(max_size, f.d()); ++i) total += f.entries[i];
  if (total > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return total.convert_to<std::uint64_t>();
}

DissectionComplex::DissectionComplex(ComplexParams params) : params_(params), vertices_(vertex_set(params)) {
  const std::size_t count = vertices_.size();
  adjacency_.assign(count, boost::dynamic_bitset<>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (dissect::compatible(vertices_[i], vertices_[j])) {
        adjacency_[i].set(j);
        adjacency_[j].set(i);
      }
    }
  }
}

std::optional<std::size_t> DissectionComplex::index_of(const Diagonal& d) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), d);
  if (it == vertices_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> DissectionComplex::indices_of(const Face& face) const {
  std::vector<std::size_t> out;
  for (const Diagonal& d : face.diagonals()) {
    auto idx = index_of(d);
    if (!idx) throw MalformedFaceError("diagonal " + to_string(d, params_) + " is not a vertex of the complex");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face DissectionComplex::face_from_indices(std::span<const std::size_t> indices) const {
  std::vector<Diagonal> diagonals;
  diagonals.reserve(indices.size());
  for (std::size_t i : indices) diagonals.push_back(vertices_.at(i));
  std::sort(diagonals.begin(), diagonals.end());
  return Face::trusted(params_, std::move(diagonals));
}

std::vector<std::vector<std::vector<std::size_t>>> DissectionComplex::enumerate_index_faces(
    const EnumerationOptions& options) const {
  const int max_size = std::clamp(options.up_to.value_or(params_.facet_size()), 0, params_.facet_size());
  const std::uint64_t projected = projected_face_count(params_, max_size);
  if (projected > options.face_limit) {
    throw ResourceLimitError(params_.describe() + " has " + std::to_string(projected) +
                                 " faces, above the limit of " + std::to_string(options.face_limit),
                             projected, options.face_limit);
  }

  const std::size_t count = vertices_.size();
  IndexTable table(static_cast<std::size_t>(max_size) + 1);
  table[0].push_back({});
  if (max_size == 0 || count == 0) return table;

  // One independent branch per minimal vertex; merged in branch order so
  // the result does not depend on the thread count.
  std::vector<IndexTable> branches(count, IndexTable(static_cast<std::size_t>(max_size) + 1));
  std::vector<std::uint64_t> emitted(count, 0);
  auto run_branch = [&](std::size_t v) {
    Enumerator e{adjacency_, static_cast<std::size_t>(max_size), branches[v], emitted[v], options.face_limit};
    IndexFace face{v};
    e.extend(face, adjacency_[v], v);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t v = 0; v < count; ++v) run_branch(v);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t v = w; v < count; v += workers) run_branch(v);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t k = 1; k < table.size(); ++k) {
      auto& src = branches[v][k];
      table[k].insert(table[k].end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
    }
  }
  return table;
}

FaceTable DissectionComplex::enumerate_faces(const EnumerationOptions& options) const {
  const auto index_table = enumerate_index_faces(options);
  FaceTable table;
  table.by_size.resize(index_table.size());
  for (std::size_t k = 0; k < index_table.size(); ++k) {
    table.by_size[k].reserve(index_table[k].size());
    for (const auto& f : index_table[k]) table.by_size[k].push_back(face_from_indices(f));
  }
  return table;
}

std::vector<Face> DissectionComplex::facets(std::uint64_t face_limit) const {
  FaceTable table = enumerate_faces({.up_to = std::nullopt, .face_limit = face_limit});
  return std::move(table.by_size.back());
}

PurityReport DissectionComplex::check_pure(std::uint64_t face_limit) const {
  const auto table = enumerate_index_faces({.up_to = std::nullopt, .face_limit = face_limit});
  const std::size_t count = vertices_.size();
  for (std::size_t k = 0; k + 1 < table.size(); ++k) {
    for (const auto& face : table[k]) {
      boost::dynamic_bitset<> common(count);
      common.set();
      for (std::size_t v : face) common &= adjacency_[v];
      if (common.none()) return {false, face_from_indices(face)};
    }
  }
  return {};
}

std::vector<std::uint64_t> DissectionComplex::f_vector_enumerated(std::uint64_t face_limit) const {
  const auto table = enumerate_index_faces({.up_to = std::nullopt, .face_limit = face_limit});
  std::vector<std::uint64_t> f;
  for (const auto& list : table) f.push_back(list.size());
  return f;
}

AbstractComplex DissectionComplex::to_abstract(std::uint64_t face_limit) const {
  const auto table = enumerate_index_faces({.up_to = std::nullopt, .face_limit = face_limit});
  std::vector<Simplex> facets;
  facets.reserve(table.back().size());
  for (const auto& f : table.back()) facets.emplace_back(f.begin(), f.end());
  std::vector<Vertex> ground(vertices_.size());
  for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = static_cast<Vertex>(i);
  return AbstractComplex(std::move(facets), std::move(ground));
}

std::vector<std::size_t> DissectionComplex::shedding_priority() const {
  const int size = params_.polygon_size();
  const int m = params_.m();
  std::vector<std::size_t> order;
  std::vector<bool> placed(vertices_.size(), false);

  // The minimal diagonal joins positions 0 and m+1; it exists once n >= 2.
  if (params_.n() >= 2) {
    for (int corner = 1; corner <= m; ++corner) {
      const Label a{corner};
      std::vector<std::pair<int, std::size_t>> group;
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (placed[i]) continue;
        for (const Chord& c : vertices_[i].constituents()) {
          if (!c.has_endpoint(a)) continue;
          const Label other = c.low() == a ? c.high() : c.low();
          group.emplace_back(arc_distance(other, a, size), i);
          break;
        }
      }
      std::sort(group.begin(), group.end());
      for (auto [dist, i] : group) {
        order.push_back(i);
        placed[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!placed[i]) order.push_back(i);
  }
  return order;
}

std::vector<int> region_sizes(const Face& face) {
  const int size = face.params().polygon_size();
  std::vector<std::vector<int>> neighbors(size);
  for (int p = 0; p < size; ++p) {
    neighbors[p].push_back((p + 1) % size);
    neighbors[p].push_back((p + size - 1) % size);
  }
  std::vector<std::pair<int, int>> directed;
  for (int p = 0; p < size; ++p) directed.emplace_back(p, (p + 1) % size);
  for (const Diagonal& d : face.diagonals()) {
    for (const Chord& c : d.constituents()) {
      const int a = c.low().position, b = c.high().position;
      neighbors[a].push_back(b);
      neighbors[b].push_back(a);
      directed.emplace_back(a, b);
      directed.emplace_back(b, a);
    }
  }

  // Walk each region with its interior on the left: at v, arriving from u,
  // leave towards the neighbor that comes just before u clockwise around v.
  auto next = [&](int u, int v) {
    const int back = arc_distance(Label{v}, Label{u}, size);
    int best = -1, best_dist = 0;
    for (int w : neighbors[v]) {
      const int dist = arc_distance(Label{v}, Label{w}, size);
      if (dist < back && dist > best_dist) {
        best = w;
        best_dist = dist;
      }
    }
    return best;
  };

  std::map<std::pair<int, int>, bool> used;
  std::vector<int> sizes;
  for (auto [u0, v0] : directed) {
    if (used[{u0, v0}]) continue;
    int u = u0, v = v0, length = 0;
    while (!used[{u, v}]) {
      used[{u, v}] = true;
      ++length;
      const int w = next(u, v);
      u = v;
      v = w;
    }
    sizes.push_back(length);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace dissect
