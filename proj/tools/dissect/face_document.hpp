#pragma once

// JSON form of a dissection:
//   {"family": "B", "m": 2, "n": 6, "diagonals": [[6, 9], [11, -11], ...]}
// Family A diagonals are [a, b] with 1 <= a < b <= mn+2. Family B diameters
// are [i, -i]; a mirror pair is written as its canonical chord [a, b] whose
// first entry is the positive initial point, the mirror being implied.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dissect/face.hpp"

namespace dissect::cli {

using Json = nlohmann::ordered_json;

class FaceDocumentError : public std::invalid_argument {
 public:
  FaceDocumentError(const std::string& what, int diagonal_index)
      : std::invalid_argument(what), diagonal_index_(diagonal_index) {}
  // -1 when the problem is not tied to one diagonal.
  int diagonal_index() const noexcept { return diagonal_index_; }

 private:
  int diagonal_index_;
};

Json diagonal_to_json(const Diagonal& d, const ComplexParams& params);
Json face_to_json(const Face& face);
Face face_from_json(const Json& doc);

Json params_to_json(const ComplexParams& params);

}  // namespace dissect::cli
