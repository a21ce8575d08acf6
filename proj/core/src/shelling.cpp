#include "dissect/shelling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>
#include <boost/dynamic_bitset.hpp>

namespace dissect {

namespace {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept { return boost::hash_range(s.begin(), s.end()); }
};

void append_order(const AbstractComplex& complex, const DecompositionCertificate& cert, std::vector<Simplex>& out) {
  if (cert.is_leaf()) {
    out.insert(out.end(), complex.facets().begin(), complex.facets().end());
    return;
  }
  const Vertex v = cert.vertex();
  const AbstractComplex lk = link(complex, v);
  std::vector<Simplex> coned;
  append_order(lk, cert.link(), coned);
  if (!complex.is_cone_over(v)) append_order(deletion(complex, v), cert.deletion(), out);
  for (Simplex& f : coned) {
    f.insert(std::upper_bound(f.begin(), f.end(), v), v);
    out.push_back(std::move(f));
  }
}

}  // namespace

std::vector<std::uint64_t> ShellingOrder::restriction_histogram() const {
  std::size_t top = 0;
  for (const auto& f : facets) top = std::max(top, f.size());
  std::vector<std::uint64_t> histogram(top + 1, 0);
  for (const auto& r : restrictions) ++histogram.at(r.size());
  return histogram;
}

ShellingCheck verify_shelling(const AbstractComplex& complex, const std::vector<Simplex>& order) {
  ShellingCheck check;
  std::vector<Simplex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != complex.facets()) {
    check.reason = "order is not a permutation of the facets";
    check.failed_step = 0;
    return check;
  }
  if (!complex.is_pure()) {
    check.reason = "complex is not pure";
    check.failed_step = 0;
    return check;
  }

  std::unordered_set<Simplex, SimplexHash> ridges;  // codimension-1 faces of earlier facets
  std::unordered_map<Vertex, boost::dynamic_bitset<>> containing;
  check.order.facets = order;

  for (std::size_t j = 0; j < order.size(); ++j) {
    const Simplex& facet = order[j];
    Simplex restriction;
    if (j > 0) {
      for (std::size_t i = 0; i < facet.size(); ++i) {
        Simplex ridge = facet;
        ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
        if (ridges.contains(ridge)) restriction.push_back(facet[i]);
      }
      // The restriction face must be new; otherwise some earlier facet meets
      // F_j outside the ridges already present.
      bool old = true;
      boost::dynamic_bitset<> common(order.size());
      common.set();
      for (Vertex v : restriction) {
        auto it = containing.find(v);
        if (it == containing.end()) {
          old = false;
          break;
        }
        common &= it->second;
      }
      if (old && restriction.size() > 0) old = common.any();
      if (old) {
        check.failed_step = j;
        check.reason = "facet " + to_string(facet) + " meets earlier facets outside a pure codimension-1 part";
        return check;
      }
    }
    for (std::size_t i = 0; i < facet.size(); ++i) {
      Simplex ridge = facet;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
      ridges.insert(std::move(ridge));
    }
    for (Vertex v : facet) {
      auto [it, fresh] = containing.try_emplace(v, order.size());
      it->second.set(j);
    }
    check.order.restrictions.push_back(std::move(restriction));
  }
  check.valid = true;
  return check;
}

ShellingOrder shelling_from_decomposition(const AbstractComplex& complex,
                                          const DecompositionCertificate& certificate) {
  std::vector<Simplex> order;
  append_order(complex, certificate, order);
  ShellingCheck check = verify_shelling(complex, order);
  if (!check.valid) throw std::logic_error("derived facet order is not a shelling: " + check.reason);
  return std::move(check.order);
}

}  // namespace dissect
