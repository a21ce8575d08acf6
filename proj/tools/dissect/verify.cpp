#include <algorithm>
#include <set>

#include "dissect/commands.hpp"
#include "dissect/decomposition.hpp"
#include "dissect/errors.hpp"
#include "dissect/homology.hpp"
#include "dissect/shelling.hpp"

namespace dissect::cli {

namespace {

struct Check {
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  Json detail = Json::object();
  std::optional<Face> counterexample;

  void fail(const Face& face) {
    passed = false;
    if (!counterexample) counterexample = face;
  }
};

Json check_json(const Check& c) {
  Json out{{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  if (c.counterexample) out["counterexample"] = face_to_json(*c.counterexample);
  return out;
}

std::vector<std::uint64_t> to_u64(const std::vector<BigInt>& v) {
  std::vector<std::uint64_t> out;
  for (const BigInt& x : v) out.push_back(x.convert_to<std::uint64_t>());
  return out;
}

std::vector<Check> counts_suite(const DissectionComplex& complex, std::uint64_t limit) {
  const ComplexParams& params = complex.params();
  std::vector<Check> checks;

  Check f_check{"f_vector_matches_closed_form"};
  const std::vector<std::uint64_t> enumerated = complex.f_vector_enumerated(limit);
  const std::vector<std::uint64_t> closed = to_u64(closed_form_f(params).entries);
  f_check.passed = enumerated == closed;
  f_check.detail = Json{{"enumerated", enumerated}, {"closed_form", closed}};
  checks.push_back(std::move(f_check));

  const FaceTable table = complex.enumerate_faces({.up_to = std::nullopt, .face_limit = limit});
  Check regions{"facets_cut_into_m_plus_2_gons"};
  for (const Face& facet : table.by_size.back()) {
    const std::vector<int> sizes = region_sizes(facet);
    const bool ok = std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == params.m() + 2; });
    if (!ok) regions.fail(facet);
  }
  checks.push_back(std::move(regions));

  if (params.family() == Family::B) {
    Check diameters{"at_most_one_diameter"};
    for (const auto& list : table.by_size) {
      for (const Face& f : list) {
        const auto count = std::count_if(f.diagonals().begin(), f.diagonals().end(),
                                         [](const Diagonal& d) { return d.kind() == DiagonalKind::BDiameter; });
        if (count > 1) diameters.fail(f);
      }
    }
    checks.push_back(std::move(diameters));
  }
  return checks;
}

// All weakly increasing sequences of length i over 1..top, times all 0/1
// vectors of length n with i ones.
template <typename F>
void for_each_image(int top, int n, int i, F&& visit) {
  std::vector<int> labels(static_cast<std::size_t>(i), 1);
  for (;;) {
    std::vector<int> flags(static_cast<std::size_t>(n), 0);
    std::fill(flags.end() - i, flags.end(), 1);
    do {
      visit(BijectionImage{labels, flags});
    } while (std::next_permutation(flags.begin(), flags.end()));
    int j = i - 1;
    while (j >= 0 && labels[static_cast<std::size_t>(j)] == top) --j;
    if (j < 0) break;
    const int next = labels[static_cast<std::size_t>(j)] + 1;
    for (int k = j; k < i; ++k) labels[static_cast<std::size_t>(k)] = next;
  }
}

std::vector<Check> bijection_suite(const DissectionComplex& complex, std::uint64_t limit) {
  const ComplexParams& params = complex.params();
  const int m = params.m(), n = params.n();
  std::vector<Check> checks;
  if (params.family() != Family::B) {
    Check skipped{"bijection_not_defined_for_family_A"};
    skipped.detail = Json{{"skipped", true}};
    checks.push_back(std::move(skipped));
    return checks;
  }

  const FaceTable table = complex.enumerate_faces({.up_to = std::nullopt, .face_limit = limit});
  Check round_trip{"decode_encode_identity"};
  Check injective{"encode_injective_per_size"};
  Check criterion{"diameter_iff_last_flag"};
  Check diameters{"diameter_counts_match_closed_form"};
  Check images{"encode_decode_identity_on_all_images"};
  Json image_counts = Json::array();
  Json diameter_counts = Json::array();

  for (int i = 0; i <= n; ++i) {
    std::set<BijectionImage> seen;
    std::uint64_t with_diameter = 0;
    for (const Face& face : table.by_size[static_cast<std::size_t>(i)]) {
      BijectionImage img;
      try {
        img = encode(face);
        if (decode(img, m, n) != face) round_trip.fail(face);
      } catch (const std::invalid_argument&) {
        round_trip.fail(face);
        continue;
      }
      if (!seen.insert(img).second) injective.fail(face);
      if (face.has_diameter() != (img.flags.back() == 1)) criterion.fail(face);
      if (face.has_diameter()) ++with_diameter;
    }
    image_counts.push_back(seen.size());
    diameter_counts.push_back(with_diameter);
    if (i >= 1 && with_diameter != diameter_count(m, n, i)) diameters.passed = false;

    std::uint64_t image_total = 0;
    for_each_image(m * n + 1, n, i, [&](const BijectionImage& img) {
      ++image_total;
      try {
        const Face face = decode(img, m, n);
        if (encode(face) != img) images.fail(face);
      } catch (const std::invalid_argument&) {
        if (images.passed) images.detail["first_failure"] = Json{{"a", img.labels}, {"eps", img.flags}};
        images.passed = false;
      }
    });
    if (image_total != f_b(m, n, i)) images.passed = false;
  }
  injective.detail = Json{{"distinct_images", image_counts}};
  diameters.detail = Json{{"faces_with_diameter", diameter_counts}};
  for (Check* c : {&round_trip, &injective, &criterion, &diameters, &images}) checks.push_back(std::move(*c));
  return checks;
}

std::vector<Check> purity_suite(const DissectionComplex& complex, std::uint64_t limit) {
  Check pure{"pure"};
  const PurityReport report = complex.check_pure(limit);
  if (!report.pure) pure.fail(*report.witness);
  return {pure};
}

std::vector<Check> shelling_suite(const DissectionComplex& complex, std::uint64_t limit) {
  const ComplexParams& params = complex.params();
  const AbstractComplex abstract = complex.to_abstract(limit);
  DecompositionSearchOptions options;
  for (std::size_t i : complex.shedding_priority()) options.priority.push_back(static_cast<Vertex>(i));
  const DecompositionResult result = find_vertex_decomposition(abstract, options);

  Check found{"vertex_decomposition_found"};
  found.passed = result.found();
  Check verified{"certificate_verifies"};
  Check shelling{"derived_shelling_verifies"};
  Check histogram{"restriction_histogram_equals_h_vector"};
  if (result.found()) {
    verified.passed = verify_vertex_decomposition(abstract, *result.certificate);
    std::vector<Simplex> order;
    try {
      const ShellingOrder derived = shelling_from_decomposition(abstract, *result.certificate);
      const std::vector<std::uint64_t> h = derived.restriction_histogram();
      const std::vector<std::uint64_t> expected = to_u64(h_from_f(closed_form_f(params)).entries);
      const std::vector<std::uint64_t> nar = to_u64(narayana_vector(params).entries);
      histogram.passed = h == expected && h == nar;
      histogram.detail = Json{{"histogram", h}, {"h_vector", expected}, {"narayana", nar}};
    } catch (const std::logic_error& e) {
      shelling.passed = false;
      histogram.passed = false;
      shelling.detail = Json{{"error", e.what()}};
    }
  } else {
    verified.passed = shelling.passed = histogram.passed = false;
  }
  return {found, verified, shelling, histogram};
}

std::vector<Check> homology_suite(const DissectionComplex& complex, std::uint64_t limit) {
  const ComplexParams& params = complex.params();
  const ReducedHomology h = reduced_homology(complex.to_abstract(limit), limit);
  const std::uint64_t top = narayana(params.family(), params.m(), params.n(), params.rank()).convert_to<std::uint64_t>();

  Check betti{"wedge_of_top_spheres"};
  std::vector<std::size_t> expected(static_cast<std::size_t>(std::max(params.rank(), 0)), 0);
  std::size_t expected_minus_one = 0;
  if (params.rank() == 0) expected_minus_one = top;
  else expected.back() = top;
  betti.passed = h.betti == expected && h.degree_minus_one == expected_minus_one;
  betti.detail = Json{{"reduced_betti", h.betti}, {"reduced_betti_minus_one", h.degree_minus_one},
                      {"expected", expected}};

  Check euler{"euler_poincare"};
  const BigInt chi = reduced_euler(closed_form_f(params));
  euler.passed = BigInt(h.euler_characteristic()) == chi;
  euler.detail = Json{{"from_betti", h.euler_characteristic()}, {"from_f_vector", big(chi)}};
  return {betti, euler};
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"counts", "bijection", "purity", "shelling", "homology", "all"};
  return suites;
}

VerifyOutcome cmd_verify(const ComplexParams& params, const std::string& suite, std::uint64_t face_limit) {
  const auto& known = verify_suites();
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  const DissectionComplex complex(params);
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto&& fn) {
    if (suite != "all" && suite != name) return;
    for (Check& c : fn(complex, face_limit)) {
      c.name = name + "." + c.name;
      checks.push_back(std::move(c));
    }
  };
  run("counts", counts_suite);
  run("bijection", bijection_suite);
  run("purity", purity_suite);
  run("shelling", shelling_suite);
  run("homology", homology_suite);

  VerifyOutcome outcome;
  outcome.report = make_report("verify");
  outcome.report["params"] = params_to_json(params);
  outcome.report["suite"] = suite;
  outcome.passed = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  Json list = Json::array();
  std::optional<Face> counterexample;
  for (const Check& c : checks) {
    list.push_back(check_json(c));
    if (!counterexample && c.counterexample) counterexample = c.counterexample;
  }
  outcome.report["checks"] = std::move(list);
  outcome.report["passed"] = outcome.passed;
  if (counterexample) outcome.report["counterexample"] = face_to_json(*counterexample);
  return outcome;
}

}  // namespace dissect::cli
