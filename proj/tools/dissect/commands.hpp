#pragma once

// Library form of the dissect subcommands. Each returns a report document;
// main.cpp handles argument parsing, output and exit codes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dissect/bijection.hpp"
#include "dissect/dissection_complex.hpp"
#include "dissect/facet_list.hpp"
#include "dissect/report.hpp"

namespace dissect::cli {

Json cmd_count(const ComplexParams& params);

struct EnumerateRequest {
  std::optional<int> up_to;
  bool list_faces = false;
  std::uint64_t face_limit = kDefaultFaceLimit;
};
Json cmd_enumerate(const ComplexParams& params, const EnumerateRequest& request);
Json cmd_facets(const ComplexParams& params, std::uint64_t face_limit);

// Facets of the dissection complex in the plain-text facet-list format,
// vertices written as diagonal tokens.
std::string export_facet_list(const ComplexParams& params, std::uint64_t face_limit);

Json cmd_encode(const Face& face);
Json cmd_decode(const BijectionImage& img, int m, int n);

struct ShellingRequest {
  bool include_order = true;
  std::uint64_t face_limit = kDefaultFaceLimit;
};
Json cmd_shelling(const ComplexParams& params, const ShellingRequest& request);
Json cmd_shelling(const NamedComplex& complex, const ShellingRequest& request);

Json cmd_homology(const ComplexParams& params, std::uint64_t face_limit);
Json cmd_homology(const NamedComplex& complex, std::uint64_t face_limit);

// Suites: counts, bijection, purity, shelling, homology, all.
struct VerifyOutcome {
  Json report;
  bool passed = false;
};
VerifyOutcome cmd_verify(const ComplexParams& params, const std::string& suite, std::uint64_t face_limit);
const std::vector<std::string>& verify_suites();

// Parses "6,11,11,12" (empty string allowed) into integers.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace dissect::cli
