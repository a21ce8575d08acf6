#include "dissect/commands.hpp"

#include <sstream>

#include "dissect/decomposition.hpp"
#include "dissect/homology.hpp"
#include "dissect/shelling.hpp"

namespace dissect::cli {

namespace {

Json simplex_json(const Simplex& s, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (Vertex v : s) {
    if (static_cast<std::size_t>(v) < names.size()) out.push_back(names[static_cast<std::size_t>(v)]);
    else out.push_back(v);
  }
  return out;
}

std::vector<std::string> diagonal_tokens(const DissectionComplex& complex) {
  std::vector<std::string> names;
  for (const Diagonal& d : complex.vertices()) names.push_back(to_string(d, complex.params()));
  return names;
}

Json shelling_report(Json report, const AbstractComplex& complex, const std::vector<std::string>& names,
                     const std::vector<Vertex>& priority, const ShellingRequest& request) {
  DecompositionSearchOptions options;
  options.priority = priority;
  const DecompositionResult result = find_vertex_decomposition(complex, options);
  report["facets"] = complex.facets().size();
  report["dimension"] = complex.dimension();
  report["pure"] = complex.is_pure();
  if (result.impure_witness) report["impure_witness"] = simplex_json(*result.impure_witness, names);
  report["vertex_decomposable"] = result.found();
  if (!result.found()) return report;

  const bool verified = verify_vertex_decomposition(complex, *result.certificate);
  report["certificate"] = Json{{"nodes", result.certificate->node_count()},
                               {"memo_entries", result.memo_entries},
                               {"verified", verified}};
  const ShellingOrder order = shelling_from_decomposition(complex, *result.certificate);
  const ShellingCheck check = verify_shelling(complex, order.facets);
  report["shelling_verified"] = check.valid;
  report["restriction_histogram"] = order.restriction_histogram();
  if (request.include_order) {
    Json steps = Json::array();
    for (std::size_t j = 0; j < order.facets.size(); ++j) {
      steps.push_back(Json{{"facet", simplex_json(order.facets[j], names)},
                           {"restriction", simplex_json(order.restrictions[j], names)}});
    }
    report["order"] = std::move(steps);
  }
  return report;
}

Json homology_report(Json report, const AbstractComplex& complex, std::uint64_t face_limit) {
  const ReducedHomology h = reduced_homology(complex, face_limit);
  report["dimension"] = complex.dimension();
  report["f_vector"] = complex.f_vector(face_limit);
  report["reduced_betti_minus_one"] = h.degree_minus_one;
  report["reduced_betti"] = h.betti;
  report["reduced_euler"] = h.euler_characteristic();
  return report;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    const int value = std::stoi(token.substr(first), &used);
    if (token.find_first_not_of(" \t", first + used) != std::string::npos) {
      throw std::invalid_argument("bad integer '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

Json cmd_count(const ComplexParams& params) {
  Json report = make_report("count");
  report["params"] = params_to_json(params);
  report["rank"] = params.rank();
  const FVector f = closed_form_f(params);
  const HVector h = h_from_f(f);
  const HVector nar = narayana_vector(params);
  report["f_vector"] = bigs(f.entries);
  report["h_vector"] = bigs(h.entries);
  report["narayana"] = bigs(nar.entries);
  report["h_equals_narayana"] = h == nar;
  report["facets"] = big(f.entries.back());
  report["reduced_euler"] = big(reduced_euler(f));
  if (params.family() == Family::B) {
    std::vector<BigInt> with_diameter{0};
    for (int i = 1; i <= params.n(); ++i) with_diameter.push_back(diameter_count(params.m(), params.n(), i));
    report["faces_with_diameter"] = bigs(with_diameter);
  }
  report["m_sequence"] = is_m_sequence(nar);
  return report;
}

Json cmd_enumerate(const ComplexParams& params, const EnumerateRequest& request) {
  Json report = make_report("enumerate");
  report["params"] = params_to_json(params);
  const DissectionComplex complex(params);
  const FaceTable table = complex.enumerate_faces({.up_to = request.up_to, .face_limit = request.face_limit});
  Json counts = Json::array();
  for (const auto& list : table.by_size) counts.push_back(list.size());
  report["vertices"] = complex.vertices().size();
  report["f_vector_enumerated"] = counts;
  const FVector closed = closed_form_f(params);
  std::vector<BigInt> prefix(closed.entries.begin(),
                             closed.entries.begin() + static_cast<std::ptrdiff_t>(table.by_size.size()));
  report["f_vector_closed_form"] = bigs(prefix);
  bool agree = true;
  for (std::size_t i = 0; i < prefix.size(); ++i) agree = agree && prefix[i] == table.by_size[i].size();
  report["agree"] = agree;
  if (request.list_faces) {
    Json faces = Json::array();
    for (const auto& list : table.by_size) {
      for (const Face& f : list) faces.push_back(face_to_json(f)["diagonals"]);
    }
    report["faces"] = std::move(faces);
  }
  return report;
}

Json cmd_facets(const ComplexParams& params, std::uint64_t face_limit) {
  Json report = make_report("facets");
  report["params"] = params_to_json(params);
  const DissectionComplex complex(params);
  const std::vector<Face> facets = complex.facets(face_limit);
  report["count"] = facets.size();
  bool all_cells_ok = true;
  Json list = Json::array();
  for (const Face& f : facets) {
    const std::vector<int> regions = region_sizes(f);
    for (int r : regions) all_cells_ok = all_cells_ok && r == params.m() + 2;
    list.push_back(face_to_json(f)["diagonals"]);
  }
  report["all_regions_m_plus_2_gons"] = all_cells_ok;
  report["facets"] = std::move(list);
  return report;
}

std::string export_facet_list(const ComplexParams& params, std::uint64_t face_limit) {
  const DissectionComplex complex(params);
  std::ostringstream out;
  out << "# facets of " << params.describe() << "\n";
  write_facet_list(out, complex.to_abstract(face_limit), diagonal_tokens(complex));
  return out.str();
}

Json cmd_encode(const Face& face) {
  Json report = make_report("encode");
  report["params"] = params_to_json(face.params());
  report["face"] = face_to_json(face);
  const BijectionImage img = encode(face);
  report["a"] = img.labels;
  report["eps"] = img.flags;
  report["round_trip"] = decode(img, face.params().m(), face.params().n()) == face;
  return report;
}

Json cmd_decode(const BijectionImage& img, int m, int n) {
  Json report = make_report("decode");
  const Face face = decode(img, m, n);
  report["params"] = params_to_json(face.params());
  report["a"] = img.labels;
  report["eps"] = img.flags;
  report["face"] = face_to_json(face);
  report["round_trip"] = encode(face) == img;
  return report;
}

Json cmd_shelling(const ComplexParams& params, const ShellingRequest& request) {
  const DissectionComplex complex(params);
  std::vector<Vertex> priority;
  for (std::size_t i : complex.shedding_priority()) priority.push_back(static_cast<Vertex>(i));
  Json head = make_report("shelling");
  head["params"] = params_to_json(params);
  Json report =
      shelling_report(std::move(head), complex.to_abstract(request.face_limit), diagonal_tokens(complex), priority, request);
  report["narayana"] = bigs(narayana_vector(params).entries);
  return report;
}

Json cmd_shelling(const NamedComplex& complex, const ShellingRequest& request) {
  return shelling_report(make_report("shelling"), complex.complex, complex.names, {}, request);
}

Json cmd_homology(const ComplexParams& params, std::uint64_t face_limit) {
  const DissectionComplex complex(params);
  Json head = make_report("homology");
  head["params"] = params_to_json(params);
  Json report = homology_report(std::move(head), complex.to_abstract(face_limit), face_limit);
  report["expected_top_betti"] = big(narayana(params.family(), params.m(), params.n(), params.rank()));
  return report;
}

Json cmd_homology(const NamedComplex& complex, std::uint64_t face_limit) {
  return homology_report(make_report("homology"), complex.complex, face_limit);
}

}  // namespace dissect::cli
