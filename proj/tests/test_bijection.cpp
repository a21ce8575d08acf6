#include <gtest/gtest.h>

#include <set>

#include "dissect/bijection.hpp"
#include "dissect/dissection_complex.hpp"
#include "dissect/errors.hpp"
#include "support.hpp"

using namespace dissect;

TEST(Bijection, TwentySixGonExampleDecodesToFourDiagonals) {
  const BijectionImage img{{6, 11, 11, 12}, {1, 1, 0, 1, 0, 1}};
  const Face face = decode(img, 2, 6);
  EXPECT_EQ(face.size(), 4u);
  std::size_t chords = 0;
  for (const Diagonal& d : face.diagonals()) chords += d.constituents().size();
  EXPECT_EQ(chords, 7u);
  EXPECT_TRUE(face.has_diameter());
  EXPECT_EQ(Face::make(face.params(), {face.diagonals().begin(), face.diagonals().end()}), face);
  EXPECT_EQ(encode(face), img);
}

TEST(Bijection, EmptyImage) {
  const Face face = decode({{}, {0, 0}}, 1, 2);
  EXPECT_TRUE(face.empty());
  EXPECT_EQ(face.params(), ComplexParams(Family::B, 1, 2));
  EXPECT_EQ(encode(face), (BijectionImage{{}, {0, 0}}));
}

TEST(Bijection, RejectsMalformedImages) {
  EXPECT_THROW(decode({{3, 2}, {1, 1, 0}}, 1, 3), InvalidImageError);     // not weakly increasing
  EXPECT_THROW(decode({{0}, {1, 0}}, 1, 2), InvalidImageError);           // label below range
  EXPECT_THROW(decode({{4}, {1, 0}}, 1, 2), InvalidImageError);           // label above mn+1
  EXPECT_THROW(decode({{1}, {1, 1}}, 1, 2), InvalidImageError);           // ones != labels
  EXPECT_THROW(decode({{1}, {2, 0}}, 1, 2), InvalidImageError);           // not 0/1
  EXPECT_THROW(decode({{1}, {1, 0, 0}}, 1, 2), InvalidImageError);        // wrong length
  EXPECT_THROW(validate_image({{1, 1}, {1, 1}}, 0, 2), std::invalid_argument);
}

TEST(Bijection, TypeAFacesAreRejected) {
  EXPECT_THROW(encode(Face(ComplexParams(Family::A, 1, 3))), MalformedFaceError);
}

TEST(Bijection, HexagonFacets) {
  const DissectionComplex complex(ComplexParams(Family::B, 1, 2));
  std::set<BijectionImage> images;
  for (const Face& f : complex.facets()) {
    const BijectionImage img = encode(f);
    EXPECT_EQ(img.ones(), 2);
    images.insert(img);
  }
  EXPECT_EQ(images.size(), 6u);
}

TEST(InitialPoint, CenterOnTheLeft) {
  const ComplexParams p(Family::B, 1, 3);  // octagon
  const int N = p.polygon_size();
  for (const Diagonal& d : vertex_set(p)) {
    const Label s = initial_point(d);
    EXPECT_GT(signed_label(s, p), 0);
    if (d.kind() == DiagonalKind::BPair) {
      // travelling start -> end anticlockwise takes the short way round
      EXPECT_LT(arc_distance(s, d.end(), N), N / 2);
    }
  }
}

TEST(SubPolygon, StepsSkipRemovedVertices) {
  SubPolygon sp(10);
  EXPECT_EQ(sp.step(Label{8}, 3), Label{1});
  sp.remove_after(Label{0}, 2);  // drops 1, 2 and their mirrors 6, 7
  EXPECT_EQ(sp.size(), 6);
  EXPECT_FALSE(sp.contains(Label{1}));
  EXPECT_FALSE(sp.contains(Label{7}));
  EXPECT_EQ(sp.step(Label{0}, 1), Label{3});
  EXPECT_EQ(sp.step(Label{5}, 1), Label{8});
}

class BijectionGrid : public ::testing::TestWithParam<ComplexParams> {};

// Every admissible image decodes to a face, re-encodes to itself, and the
// decoded faces are exactly the brute-force faces of each size.
TEST_P(BijectionGrid, ExhaustiveOverImages) {
  const ComplexParams p = GetParam();
  const int m = p.m(), n = p.n();
  const auto diagonals = oracle::diagonals_b(m, n);
  const auto faces = oracle::all_faces(diagonals, p.polygon_size());
  for (int i = 0; i <= n; ++i) {
    std::set<oracle::DiagFace> decoded;
    std::size_t with_diameter = 0;
    const auto images = oracle::images(m * n + 1, n, i);
    EXPECT_EQ(oracle::Int(images.size()), oracle::f_type_b(m, n)[static_cast<std::size_t>(i)]);
    for (const auto& [labels, flags] : images) {
      const BijectionImage img{labels, flags};
      const Face face = decode(img, m, n);
      ASSERT_EQ(face.size(), static_cast<std::size_t>(i));
      EXPECT_EQ(encode(face), img);
      EXPECT_EQ(face.has_diameter(), flags.back() == 1);
      with_diameter += face.has_diameter();
      decoded.insert(testing_support::to_oracle(face));
    }
    EXPECT_EQ(decoded, faces[static_cast<std::size_t>(i)]) << "size " << i;
    if (i >= 1) {
      EXPECT_EQ(oracle::Int(with_diameter), oracle::choose(m * n + i, i) * oracle::choose(n - 1, i - 1));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(TypeB, BijectionGrid, ::testing::ValuesIn(testing_support::grid(Family::B, 3, 4)),
                         [](const auto& info) { return testing_support::param_name(info.param); });
