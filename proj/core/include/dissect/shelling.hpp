#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dissect/decomposition.hpp"
#include "dissect/simplicial.hpp"

namespace dissect {

// A facet order together with the restriction face r(F_j) of every step:
// the unique minimal face that F_j adds to the union of its predecessors.
struct ShellingOrder {
  std::vector<Simplex> facets;
  std::vector<Simplex> restrictions;

  // histogram[k] = number of steps whose restriction face has k vertices.
  // For a shelling of a pure complex this is its h-vector.
  std::vector<std::uint64_t> restriction_histogram() const;
};

struct ShellingCheck {
  bool valid = false;
  // Index of the first step that breaks the shelling condition.
  std::optional<std::size_t> failed_step;
  std::string reason;
  ShellingOrder order;
};

// Pure shelling: each F_j (j >= 2) meets the union of the earlier facets in
// a nonempty pure complex of dimension dim F_j - 1.
ShellingCheck verify_shelling(const AbstractComplex& complex, const std::vector<Simplex>& order);

// Facets of the deletion first, then the facets of the link coned with the
// shedding vertex, recursively. Throws std::logic_error if the result does
// not verify (the certificate was bad).
ShellingOrder shelling_from_decomposition(const AbstractComplex& complex, const DecompositionCertificate& certificate);

}  // namespace dissect
