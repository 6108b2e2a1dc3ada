#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spherevol/bounds.hpp"
#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"
#include "spherevol/gale.hpp"
#include "spherevol/stationarity.hpp"

using namespace spherevol;

TEST(RegularSimplex, InnerProducts) {
  const auto d1 = regular_simplex(1);
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_NEAR(d1[0][0], -d1[1][0], 1e-15);
  EXPECT_NEAR(std::abs(d1[0][0]), 1.0, 1e-15);
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto s = regular_simplex(k);
    ASSERT_EQ(s.size(), k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j)
        EXPECT_NEAR(dot(s[i], s[j]), i == j ? 1.0 : -1.0 / k, 1e-14);
  }
  EXPECT_THROW(regular_simplex(0), PreconditionError);
}

TEST(OrthogonalSimplexProduct, Examples) {
  const auto sq = orthogonal_simplex_product(SimplexFactorSpec({1, 1}));
  EXPECT_EQ(sq.dim(), 2u);
  EXPECT_NEAR(volume(sq), 2.0, 1e-14);
  const auto bip = orthogonal_simplex_product(SimplexFactorSpec({1, 2}));
  EXPECT_EQ(bip.size(), 5u);
  EXPECT_NEAR(volume(bip), std::sqrt(3.0) / 2.0, 1e-14);
  const auto six = orthogonal_simplex_product(SimplexFactorSpec({2, 2, 2}));
  EXPECT_EQ(six.dim(), 6u);
  EXPECT_EQ(six.size(), 9u);
  EXPECT_THROW(SimplexFactorSpec({2, 0}), PreconditionError);
}

TEST(OrthogonalSimplexProduct, BlocksInCoordinateOrder) {
  const auto p = orthogonal_simplex_product(SimplexFactorSpec({1, 2}));
  EXPECT_NEAR(std::abs(p.vertex(0)[0]), 1.0, 1e-15);
  EXPECT_NEAR(p.vertex(2)[0], 0.0, 1e-15);
  EXPECT_NEAR(std::hypot(p.vertex(2)[1], p.vertex(2)[2]), 1.0, 1e-15);
}

TEST(OrthogonalSimplexProductProperty, VolumeFactorizes) {
  const std::vector<std::vector<std::size_t>> specs{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 1, 1}, {1, 1, 2},
                                                    {1, 2, 2}, {2, 2, 2}, {1, 1, 3}, {1, 1, 1, 1}};
  for (const auto& dims : specs) {
    const SimplexFactorSpec spec(dims);
    double expect = 1.0 / static_cast<double>(factorial(spec.total()));
    for (auto k : dims) expect *= static_cast<double>(factorial(k)) * volume(regular_simplex_polytope(k));
    EXPECT_NEAR(volume(orthogonal_simplex_product(spec)), expect, 1e-10);
  }
}

TEST(OptimalDPlus2, Examples) {
  EXPECT_NEAR(volume(optimal_dplus2(2)), 2.0, 1e-14);
  EXPECT_NEAR(volume(optimal_dplus2(4)), 27.0 / 96.0, 1e-14);
  EXPECT_NEAR(volume(optimal_dplus2(5)), 1.0 / 15.0, 1e-14);
  EXPECT_THROW(optimal_dplus2(1), PreconditionError);
}

TEST(OptimalDPlus3, Examples) {
  EXPECT_NEAR(volume(optimal_dplus3(3)), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(volume(optimal_dplus3(4)), std::sqrt(3.0) / 4.0, 1e-14);
  EXPECT_NEAR(volume(optimal_dplus3(6)), 9.0 * std::sqrt(3.0) / 640.0, 1e-14);
  EXPECT_EQ(balanced_split3(4).dims(), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(balanced_split3(8).dims(), (std::vector<std::size_t>{2, 3, 3}));
}

TEST(CyclicTrig, C47MatchesClosedForm) {
  const double expect = 49.0 / 192.0 * (std::cos(std::numbers::pi / 7) + std::cos(2 * std::numbers::pi / 7));
  EXPECT_NEAR(volume(cyclic_trig(4, 7)), expect, 1e-12);
  EXPECT_NEAR(volume(cyclic_trig(4, 7)), 0.3890545563452942, 1e-12);
}

TEST(CyclicTrig, C69Volume) {
  // Exact value of this realization, from a 50-digit facet sum identified
  // by integer relation: (3 sqrt 3 + 12 sin(pi/9) + 6 sin(2pi/9)) / 640.
  const double exact =
      (3.0 * std::sqrt(3.0) + 12.0 * std::sin(std::numbers::pi / 9) + 6.0 * std::sin(2 * std::numbers::pi / 9)) / 640.0;
  EXPECT_NEAR(exact, 0.020557999688646707, 1e-15);
  EXPECT_NEAR(volume(cyclic_trig(6, 9)), exact, 1e-12);
  EXPECT_LT(volume(cyclic_trig(6, 9)), volume(p6()));
}

TEST(CyclicTrig, PlanarCaseIsRegularPolygon) {
  for (std::size_t n = 5; n <= 9; ++n) {
    const auto c = cyclic_trig(2, n);
    const auto r = regular_polygon(n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(distance(c.vertex(i), r.vertex(i)), 0.0, 1e-14);
    EXPECT_NEAR(volume(c), n / 2.0 * std::sin(2 * std::numbers::pi / n), 1e-12);
  }
}

TEST(CyclicTrig, Errors) {
  EXPECT_THROW(cyclic_trig(3, 7), UnsupportedError);
  EXPECT_THROW(cyclic_trig(4, 6), PreconditionError);
}

TEST(CyclicTrigProperty, DPlus3GaleIsRegularPolygon) {
  for (std::size_t d : {2u, 4u, 6u, 8u}) {
    const auto c = contract_diagram(gale_transform(cyclic_trig(d, d + 3)));
    ASSERT_TRUE(c.contracted) << d;
    EXPECT_EQ(c.multiplicities, std::vector<std::size_t>(d + 3, 1));
    // Normalized points are equally spaced on the circle.
    for (const auto& p : c.diagram.points) EXPECT_NEAR(norm(p), 1.0, 1e-12);
  }
}

TEST(Bipyramid, TriangleAndCross) {
  EXPECT_NEAR(volume(bipyramid(regular_polygon(3))), std::sqrt(3.0) / 2.0, 1e-14);
  EXPECT_NEAR(volume(cross_polytope(3)), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(volume(cross_polytope(4)), 2.0 / 3.0, 1e-14);
  const auto b = bipyramid(regular_polygon(4));
  EXPECT_NEAR(b.vertex(4)[2], 1.0, 0.0);
  EXPECT_NEAR(b.vertex(5)[2], -1.0, 0.0);
  EXPECT_NEAR(volume(b), 4.0 / 3.0, 1e-14);
}

TEST(CrossPolytope, Ordering) {
  const auto c = cross_polytope(2);
  EXPECT_EQ(c.vertex(0), (Vec{1, 0}));
  EXPECT_EQ(c.vertex(1), (Vec{-1, 0}));
  EXPECT_EQ(c.vertex(2), (Vec{0, 1}));
}

TEST(NamedPolytopes, P4AndP6) {
  EXPECT_EQ(p4().dim(), 4u);
  EXPECT_EQ(p4().size(), 7u);
  EXPECT_NEAR(volume(p4()), std::sqrt(3.0) / 4.0, 1e-14);
  EXPECT_NEAR(volume(p6()), 9.0 * std::sqrt(3.0) / 640.0, 1e-14);
}

TEST(Remark54Polytope, ListedFacts) {
  const auto p = remark54_3polytope();
  for (const auto& v : p.vertices()) EXPECT_NEAR(norm(v), 1.0, 1e-15);
  for (const auto& s : distance_profile(p, identity_ordering(6))) EXPECT_LE(s.spread, 1e-12);
  EXPECT_NEAR(volume(p), 1.0, 1e-12);  // Qhull gives exactly 1
  EXPECT_NEAR(p.vertex(1)[0], -2.0 / 3.0, 1e-16);
}

TEST(ConstructionsProperty, StationaryWhereClaimed) {
  std::vector<InscribedPolytope> polys{cyclic_trig(4, 7), cyclic_trig(6, 9)};
  for (std::size_t d = 2; d <= 8; ++d) polys.push_back(regular_simplex_polytope(d));
  for (std::size_t d = 2; d <= 5; ++d) polys.push_back(cross_polytope(d));
  for (std::size_t d = 2; d <= 7; ++d) polys.push_back(optimal_dplus2(d));
  for (std::size_t d = 3; d <= 7; ++d) polys.push_back(optimal_dplus3(d));
  for (const auto& p : polys) EXPECT_LE(check_property_z(p).max_residual, 1e-8);
}
