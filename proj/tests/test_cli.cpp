#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "dissect/cli.hpp"
#include "dissect/dissection_complex.hpp"
#include "dissect/face_document.hpp"
#include "dissect/render.hpp"
#include "dissect/report.hpp"

using namespace dissect;
using namespace dissect::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("dissect_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(CliCount, TypeA) {
  const CliRun r = run({"count", "--family", "A", "--m", "2", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["params"]["family"], "A");
  EXPECT_EQ(j["f_vector"], Json::parse("[1,8,12]"));
  EXPECT_EQ(j["h_vector"], Json::parse("[1,6,5]"));
}

TEST(CliCount, TypeB) {
  Json j = run({"count", "--family", "B", "--m", "2", "--n", "2"}).json();
  EXPECT_EQ(j["f_vector"], Json::parse("[1,10,15]"));
  EXPECT_EQ(j["h_vector"], Json::parse("[1,8,6]"));
  j = run({"count", "--family", "B", "--m", "1", "--n", "1"}).json();
  EXPECT_EQ(j["f_vector"], Json::parse("[1,2]"));
  EXPECT_EQ(j["h_vector"], Json::parse("[1,1]"));
}

TEST(CliCount, TableFormat) {
  const CliRun r = run({"count", "--family", "A", "--m", "2", "--n", "3", "--format", "table"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("f_vector: [1,8,12]"), std::string::npos) << r.out;
}

TEST(CliUsage, BadFlagsExitTwo) {
  EXPECT_EQ(run({"count", "--family", "C", "--m", "1", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--family", "A", "--m", "0", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"count"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--family", "A", "--m", "1", "--n", "2", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"shelling", "--family", "A"}).code, kExitUsage);
  EXPECT_EQ(run({"decode", "--a", "1,x", "--eps", "1,0", "--m", "1", "--n", "2"}).code, kExitUsage);
}

TEST(CliVerify, Suites) {
  CliRun r = run({"verify", "--family", "B", "--m", "1", "--n", "2", "--suite", "all"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_TRUE(r.json()["passed"].get<bool>());
  r = run({"verify", "--family", "A", "--m", "3", "--n", "4", "--suite", "counts"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  r = run({"verify", "--family", "B", "--m", "2", "--n", "6", "--suite", "counts"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(CliVerify, ResourceLimitExitsThree) {
  CliRun r = run({"verify", "--family", "B", "--m", "2", "--n", "6", "--suite", "counts", "--limit", "1000"});
  EXPECT_EQ(r.code, kExitResource);
  const Json j = r.json();
  EXPECT_EQ(j["error"]["kind"], "resource_limit");
  EXPECT_EQ(j["error"]["limit"], 1000);
  EXPECT_GT(j["error"]["projected"].get<std::uint64_t>(), 1000u);

  ::setenv("DISSECT_FACE_LIMIT", "50", 1);
  r = run({"enumerate", "--family", "B", "--m", "2", "--n", "3"});
  EXPECT_EQ(r.code, kExitResource);
  ::setenv("DISSECT_FACE_LIMIT", "bogus", 1);
  r = run({"enumerate", "--family", "B", "--m", "2", "--n", "3"});
  EXPECT_EQ(r.code, kExitUsage);
  // an explicit flag wins over the environment
  r = run({"enumerate", "--family", "B", "--m", "2", "--n", "3", "--limit", "100000"});
  EXPECT_EQ(r.code, kExitOk);
  ::unsetenv("DISSECT_FACE_LIMIT");
}

TEST(CliBijection, TwentySixGonExample) {
  const CliRun r = run({"decode", "--a", "6,11,11,12", "--eps", "1,1,0,1,0,1", "--m", "2", "--n", "6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["face"]["diagonals"].size(), 4u);
  EXPECT_TRUE(j["round_trip"].get<bool>());

  const auto path = temp_file("gon26.json", j["face"].dump());
  const CliRun e = run({"encode", "--face", path.string()});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_EQ(e.json()["a"], Json::parse("[6,11,11,12]"));
  EXPECT_EQ(e.json()["eps"], Json::parse("[1,1,0,1,0,1]"));
}

TEST(CliBijection, EmptyImage) {
  const CliRun r = run({"decode", "--a", "", "--eps", "0,0", "--m", "1", "--n", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.json()["face"]["diagonals"].empty());
}

TEST(CliBijection, InvalidImageIsUsageError) {
  const CliRun r = run({"decode", "--a", "3,2", "--eps", "1,1,0", "--m", "1", "--n", "3"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.json()["error"]["kind"], "invalid_image");
}

TEST(CliBijection, HexagonFacetsGiveSixImages) {
  const DissectionComplex complex(ComplexParams(Family::B, 1, 2));
  std::set<std::string> images;
  int i = 0;
  for (const Face& f : complex.facets()) {
    const auto path = temp_file("hex" + std::to_string(i++) + ".json", face_to_json(f).dump());
    const Json j = run({"encode", "--face", path.string()}).json();
    EXPECT_EQ(j["a"].size(), 2u);
    images.insert(j["a"].dump() + j["eps"].dump());
  }
  EXPECT_EQ(images.size(), 6u);
}

TEST(FaceDocument, RoundTripsEveryFace) {
  for (const ComplexParams& p : {ComplexParams(Family::A, 2, 4), ComplexParams(Family::B, 2, 2)}) {
    const DissectionComplex complex(p);
    for (const auto& level : complex.enumerate_faces().by_size) {
      for (const Face& f : level) {
        const Json doc = face_to_json(f);
        EXPECT_EQ(face_from_json(doc), f);
        EXPECT_EQ(face_to_json(face_from_json(doc)), doc);
      }
    }
  }
}

TEST(FaceDocument, NamesOffendingDiagonal) {
  const Json doc = Json::parse(R"({"family":"B","m":2,"n":6,"diagonals":[[6,9],[11,-5],[1,2]]})");
  try {
    face_from_json(doc);
    FAIL();
  } catch (const FaceDocumentError& e) {
    EXPECT_EQ(e.diagonal_index(), 2);
  }
  // a non-canonical constituent of a pair, and a diameter written backwards
  EXPECT_THROW(face_from_json(Json::parse(R"({"family":"B","m":1,"n":2,"diagonals":[[-1,-3]]})")),
               FaceDocumentError);
  EXPECT_THROW(face_from_json(Json::parse(R"({"family":"B","m":1,"n":2,"diagonals":[[-1,1]]})")),
               FaceDocumentError);
  EXPECT_THROW(face_from_json(Json::parse(R"({"family":"A","m":1,"n":3,"diagonals":[[1,3],[2,4]]})")),
               FaceDocumentError);
  EXPECT_THROW(face_from_json(Json::parse(R"({"family":"A","m":1,"diagonals":[]})")), FaceDocumentError);

  const auto path = temp_file("bad.json", doc.dump());
  const CliRun r = run({"encode", "--face", path.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_EQ(r.json()["error"]["diagonal_index"], 2);
}

TEST(CliRender, Deterministic) {
  const Json empty = Json::parse(R"({"family":"B","m":1,"n":2,"diagonals":[]})");
  const std::string svg = render_svg(face_from_json(empty));
  EXPECT_EQ(svg.find("<line"), std::string::npos);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);

  const Json gon26 = run({"decode", "--a", "6,11,11,12", "--eps", "1,1,0,1,0,1", "--m", "2", "--n", "6"}).json()["face"];
  const auto in = temp_file("gon26_render.json", gon26.dump());
  const auto out = std::filesystem::temp_directory_path() / "dissect_test_gon26.svg";
  ASSERT_EQ(run({"render", "--face", in.string(), "--out", out.string()}).code, kExitOk);
  std::ifstream f(out);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const CliRun again = run({"render", "--face", in.string()});
  EXPECT_EQ(written, again.out);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = written.find("<line", pos)) != std::string::npos; ++pos) ++lines;
  EXPECT_EQ(lines, 7u);
  EXPECT_NE(written.find("overline"), std::string::npos);
}

TEST(CliFacetList, ExportFeedsShellingAndHomology) {
  const CliRun exported = run({"facets", "--family", "B", "--m", "1", "--n", "2", "--export"});
  ASSERT_EQ(exported.code, kExitOk);
  const auto path = temp_file("hex_facets.txt", exported.out);
  const Json h = run({"homology", "--facets", path.string()}).json();
  EXPECT_EQ(h["reduced_betti"], Json::parse("[0,1]"));
  const Json s = run({"shelling", "--facets", path.string()}).json();
  EXPECT_TRUE(s["vertex_decomposable"].get<bool>());
  EXPECT_EQ(s["restriction_histogram"], Json::parse("[1,4,1]"));
}

TEST(CliShelling, ParamsReport) {
  const CliRun r = run({"shelling", "--family", "A", "--m", "2", "--n", "4", "--no-order"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["restriction_histogram"], j["narayana"]);
  EXPECT_FALSE(j.contains("order"));
}

TEST(CliReports, DeterministicUnlessTimed) {
  const std::vector<std::string> args{"verify", "--family", "B", "--m", "2", "--n", "2", "--suite", "all"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_FALSE(run(args).json().contains("timing"));
  auto timed = args;
  timed.push_back("--timing");
  EXPECT_TRUE(run(timed).json().contains("timing"));
}
