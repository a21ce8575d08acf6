#include <gtest/gtest.h>

#include <random>

#include "dissect/dissection_complex.hpp"
#include "dissect/homology.hpp"
#include "support.hpp"

using namespace dissect;

TEST(Homology, Spheres) {
  const AbstractComplex circle({{0, 1}, {1, 2}, {0, 2}});
  auto h = reduced_homology(circle);
  EXPECT_EQ(h.betti, (std::vector<std::size_t>{0, 1}));
  const AbstractComplex s2({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  h = reduced_homology(s2);
  EXPECT_EQ(h.betti, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(h.euler_characteristic(), 1);
}

TEST(Homology, DegenerateComplexes) {
  const auto h = reduced_homology(AbstractComplex::empty_face_only());
  EXPECT_EQ(h.degree_minus_one, 1u);
  EXPECT_TRUE(h.betti.empty());
  EXPECT_EQ(reduced_homology(AbstractComplex::simplex({0, 1, 2})).betti, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(reduced_homology(AbstractComplex(std::vector<Simplex>{{0}, {1}, {2}})).betti, std::vector<std::size_t>{2});
}

TEST(Homology, TorsionFreeRankOfProjectivePlane) {
  // six-vertex real projective plane: rational homology vanishes
  const AbstractComplex rp2({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
                             {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  EXPECT_EQ(reduced_homology(rp2).betti, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Homology, BoundarySquaresToZero) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Simplex> sets;
    for (int k = 0; k < 5; ++k) {
      std::vector<Vertex> pool{0, 1, 2, 3, 4, 5, 6};
      std::shuffle(pool.begin(), pool.end(), rng);
      sets.push_back(make_simplex({pool.begin(), pool.begin() + 4}));
    }
    const AbstractComplex c(sets);
    const auto faces = c.faces_by_size();
    for (int k = 1; k + 1 < static_cast<int>(faces.size()); ++k) {
      EXPECT_TRUE(composes_to_zero(boundary_matrix(faces, k - 1), boundary_matrix(faces, k)));
    }
    const auto h = reduced_homology(c);
    auto expected = oracle::reduced_betti(testing_support::facets_of(c));
    EXPECT_EQ(expected.front(), h.degree_minus_one);
    expected.erase(expected.begin());
    EXPECT_EQ(h.betti, expected);
  }
}

class HomologyGrid : public ::testing::TestWithParam<ComplexParams> {};

TEST_P(HomologyGrid, WedgeOfTopSpheres) {
  const ComplexParams p = GetParam();
  const AbstractComplex abs = DissectionComplex(p).to_abstract();
  const auto h = reduced_homology(abs);
  const oracle::Int top = testing_support::oracle_narayana(p).back();
  std::vector<std::size_t> expected(static_cast<std::size_t>(p.rank()), 0);
  if (p.rank() == 0) {
    EXPECT_EQ(oracle::Int(h.degree_minus_one), top);
  } else {
    expected.back() = top.convert_to<std::size_t>();
    EXPECT_EQ(h.degree_minus_one, 0u);
  }
  EXPECT_EQ(h.betti, expected);
}

TEST_P(HomologyGrid, AgreesWithModPRank) {
  const ComplexParams p = GetParam();
  const AbstractComplex abs = DissectionComplex(p).to_abstract();
  if (abs.facets().size() > 200) GTEST_SKIP() << "dense oracle too slow";
  const auto h = reduced_homology(abs);
  auto expected = oracle::reduced_betti(testing_support::facets_of(abs));
  EXPECT_EQ(expected.front(), h.degree_minus_one);
  expected.erase(expected.begin());
  EXPECT_EQ(h.betti, expected);
}

INSTANTIATE_TEST_SUITE_P(TypeA, HomologyGrid, ::testing::ValuesIn(testing_support::grid(Family::A, 2, 4)),
                         [](const auto& info) { return testing_support::param_name(info.param); });
INSTANTIATE_TEST_SUITE_P(TypeB, HomologyGrid, ::testing::ValuesIn(testing_support::grid(Family::B, 2, 3)),
                         [](const auto& info) { return testing_support::param_name(info.param); });
