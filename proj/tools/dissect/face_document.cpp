#include "dissect/face_document.hpp"

#include "dissect/errors.hpp"

namespace dissect::cli {

Json params_to_json(const ComplexParams& params) {
  return Json{{"family", to_string(params.family())}, {"m", params.m()}, {"n", params.n()}};
}

Json diagonal_to_json(const Diagonal& d, const ComplexParams& params) {
  return Json::array({signed_label(d.start(), params), signed_label(d.end(), params)});
}

Json face_to_json(const Face& face) {
  Json doc = params_to_json(face.params());
  Json list = Json::array();
  for (const Diagonal& d : face.diagonals()) list.push_back(diagonal_to_json(d, face.params()));
  doc["diagonals"] = std::move(list);
  return doc;
}

namespace {

int int_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw FaceDocumentError(std::string("missing or non-integer field '") + key + "'", -1);
  }
  return doc[key].get<int>();
}

Diagonal parse_diagonal(const Json& entry, const ComplexParams& params, int index) {
  const std::string where = "diagonal #" + std::to_string(index) + " " + entry.dump();
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
    throw FaceDocumentError(where + ": expected a pair of integer labels", index);
  }
  const int a = entry[0].get<int>();
  const int b = entry[1].get<int>();
  try {
    const Label la = label_from_signed(a, params);
    const Label lb = label_from_signed(b, params);
    const Chord chord = Chord::make(la, lb, params.polygon_size());
    if (params.family() == Family::A) {
      if (a >= b) throw FaceDocumentError(where + ": family A diagonals are written [a, b] with a < b", index);
      const Diagonal d = Diagonal::a_chord(chord);
      if (!is_valid_diagonal(d, params)) {
        throw FaceDocumentError(where + ": does not cut off parts with vertex counts = 2 mod m", index);
      }
      return d;
    }
    if (a == -b) {
      if (a < 0) throw FaceDocumentError(where + ": write diameters as [i, -i] with i > 0", index);
      return Diagonal::b_diameter(chord);
    }
    const Diagonal d = Diagonal::b_pair(chord);
    if (d.start() != la || d.end() != lb) {
      throw FaceDocumentError(where + ": not canonical; write this mirror pair as " +
                                  diagonal_to_json(d, params).dump(),
                              index);
    }
    if (!is_valid_diagonal(d, params)) {
      throw FaceDocumentError(where + ": cut-off arc length is not 1 mod m", index);
    }
    return d;
  } catch (const FaceDocumentError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FaceDocumentError(where + ": " + e.what(), index);
  }
}

}  // namespace

Face face_from_json(const Json& doc) {
  if (!doc.is_object()) throw FaceDocumentError("face document must be a JSON object", -1);
  if (!doc.contains("family") || !doc["family"].is_string()) {
    throw FaceDocumentError("missing string field 'family'", -1);
  }
  Family family;
  try {
    family = parse_family(doc["family"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FaceDocumentError(e.what(), -1);
  }
  const int m = int_field(doc, "m");
  const int n = int_field(doc, "n");
  std::optional<ComplexParams> params;
  try {
    params.emplace(family, m, n);
  } catch (const std::invalid_argument& e) {
    throw FaceDocumentError(e.what(), -1);
  }
  if (!doc.contains("diagonals") || !doc["diagonals"].is_array()) {
    throw FaceDocumentError("missing array field 'diagonals'", -1);
  }
  std::vector<Diagonal> diagonals;
  const Json& list = doc["diagonals"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    diagonals.push_back(parse_diagonal(list[i], *params, static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (diagonals[i] == diagonals[j]) {
        throw FaceDocumentError("diagonal #" + std::to_string(i) + " repeats diagonal #" + std::to_string(j),
                                static_cast<int>(i));
      }
      if (!compatible(diagonals[i], diagonals[j])) {
        throw FaceDocumentError("diagonal #" + std::to_string(i) + " " + list[i].dump() + " crosses diagonal #" +
                                    std::to_string(j) + " " + list[j].dump(),
                                static_cast<int>(i));
      }
    }
  }
  try {
    return Face::make(*params, std::move(diagonals));
  } catch (const MalformedFaceError& e) {
    throw FaceDocumentError(e.what(), -1);
  }
}

}  // namespace dissect::cli
