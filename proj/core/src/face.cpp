#include "dissect/face.hpp"

#include <algorithm>

#include "dissect/errors.hpp"

namespace dissect {

Face Face::make(ComplexParams params, std::vector<Diagonal> diagonals) {
  std::sort(diagonals.begin(), diagonals.end());
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    const Diagonal& d = diagonals[i];
    if (d.polygon_size() != params.polygon_size() || !is_valid_diagonal(d, params)) {
      throw MalformedFaceError("diagonal " + dissect::to_string(d, params) + " is not valid for " + params.describe());
    }
    if (i > 0 && diagonals[i - 1] == d) {
      throw MalformedFaceError("diagonal " + dissect::to_string(d, params) + " listed twice");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!compatible(diagonals[j], d)) {
        throw MalformedFaceError("diagonal " + dissect::to_string(d, params) + " crosses " +
                                 dissect::to_string(diagonals[j], params));
      }
    }
  }
  if (static_cast<int>(diagonals.size()) > params.facet_size()) {
    throw MalformedFaceError("face has more than " + std::to_string(params.facet_size()) + " diagonals");
  }
  return Face(params, std::move(diagonals));
}

Face Face::trusted(ComplexParams params, std::vector<Diagonal> diagonals) {
  return Face(params, std::move(diagonals));
}

bool Face::contains(const Diagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

bool Face::has_diameter() const {
  return std::any_of(diagonals_.begin(), diagonals_.end(),
                     [](const Diagonal& d) { return d.kind() == DiagonalKind::BDiameter; });
}

std::string Face::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    if (i) out += " ";
    out += dissect::to_string(diagonals_[i], params_);
  }
  return out + "}";
}

}  // namespace dissect
