#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spherevol/bounds.hpp"
#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"
#include "spherevol/optimizer.hpp"
#include "support.hpp"

using namespace spherevol;

namespace {

OptimizerConfig config(std::size_t d, std::size_t n, std::size_t starts = 50) {
  OptimizerConfig c;
  c.dim = d;
  c.nverts = n;
  c.starts = starts;
  c.seed = 0;
  return c;
}

std::vector<std::vector<std::size_t>> facet_sets(const std::vector<Vec>& pts, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : enumerate_facets(InscribedPolytope(d, pts))) out.push_back(f.vertex_indices);
  return out;
}

}  // namespace

TEST(OptimizerConfig, Validation) {
  auto c = config(3, 3);
  EXPECT_THROW(c.validate(), PreconditionError);
  c = config(3, 6);
  c.alpha = 0.0;
  EXPECT_THROW(c.validate(), PreconditionError);
  c.alpha = 1.5;
  EXPECT_THROW(c.validate(), PreconditionError);
  c = config(3, 6, 0);
  EXPECT_THROW(ascend(c), PreconditionError);
}

TEST(Ascend, Examples) {
  EXPECT_NEAR(ascend(config(2, 5)).best_volume, 2.5 * std::sin(2 * std::numbers::pi / 5), 1e-6);
  EXPECT_NEAR(ascend(config(3, 5)).best_volume, std::sqrt(3.0) / 2.0, 1e-6);
  EXPECT_NEAR(ascend(config(4, 6)).best_volume, 0.28125, 1e-6);
}

TEST(AscendProperty, RecoversKnownOptima) {
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t n = 3; n <= 8; ++n) cases.push_back({2, n});
  for (std::size_t n = 4; n <= 6; ++n) cases.push_back({3, n});
  cases.push_back({4, 6});
  for (const auto& [d, n] : cases) {
    const auto r = ascend(config(d, n));
    EXPECT_NEAR(r.best_volume, *known_optimum(d, n), 1e-6) << d << "," << n;
    ASSERT_TRUE(r.stationarity.has_value());
    EXPECT_LE(r.stationarity->max_residual, 1e-6);
  }
}

TEST(AscendProperty, ConvergedStartsAreStationary) {
  const auto r = ascend(config(3, 7, 20));
  for (const auto& t : r.starts) {
    if (!t.converged) continue;
    const InscribedPolytope p(3, t.final_vertices);
    const auto cx = triangulate_boundary(p);
    if (!origin_interior(cx.facets)) continue;
    EXPECT_LE(check_property_z(p, cx).max_residual, 1e-6);
  }
}

TEST(AscendProperty, MonotoneWithinCombinatorialType) {
  std::mt19937_64 rng(51);
  auto cfg = config(3, 6);
  cfg.max_iters = 1;
  std::size_t checked = 0;
  for (int rep = 0; rep < 40; ++rep) {
    auto pts = testing_support::random_polytope(rng, 3, 6).vertices();
    for (int sweep = 0; sweep < 30; ++sweep) {
      const auto before = facet_sets(pts, 3);
      const auto t = ascend_from(cfg, pts);
      if (!t.failure.empty()) break;
      if (facet_sets(t.final_vertices, 3) == before) {
        EXPECT_GE(t.volumes.back() - t.volumes.front(), -1e-12);
        ++checked;
      }
      pts = t.final_vertices;
    }
  }
  EXPECT_GT(checked, 500u);
}

TEST(AscendProperty, RotationEquivariant) {
  std::mt19937_64 rng(52);
  auto cfg = config(3, 6);
  for (int rep = 0; rep < 10; ++rep) {
    const auto start = testing_support::random_polytope(rng, 3, 6).vertices();
    const auto rot = testing_support::random_rotation(rng, 3);
    const auto a = ascend_from(cfg, start);
    const auto b = ascend_from(cfg, testing_support::apply(rot, start));
    EXPECT_NEAR(a.final_volume, b.final_volume, 1e-9);
  }
}

TEST(Ascend, DeterministicAcrossThreadCounts) {
  auto one = config(3, 6, 12);
  one.threads = 1;
  auto many = one;
  many.threads = 4;
  const auto a = ascend(one);
  const auto b = ascend(many);
  EXPECT_EQ(a.best_start, b.best_start);
  EXPECT_EQ(a.best_volume, b.best_volume);
  ASSERT_EQ(a.starts.size(), b.starts.size());
  for (std::size_t s = 0; s < a.starts.size(); ++s) EXPECT_EQ(a.starts[s].final_volume, b.starts[s].final_volume);
  EXPECT_EQ(a.best.vertices(), b.best.vertices());
}

TEST(Ascend, TrajectoryRecordsEverySweep) {
  auto cfg = config(2, 5, 3);
  const auto r = ascend(cfg);
  for (const auto& t : r.starts) EXPECT_EQ(t.volumes.size(), t.iterations + 1);
}

TEST(SignedForce, MatchesVertexForceWithOriginInside) {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = testing_support::random_polytope_with_origin(rng, 4, 7);
    const auto c = triangulate_boundary(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto a = signed_force(p.vertices(), c, i);
      const auto b = vertex_force(p, c, i).force;
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(a[k], b[k], 1e-12);
    }
  }
}

TEST(CanonicalVertices, InvariantUnderOrthogonalMapsAndRelabeling) {
  std::mt19937_64 rng(54);
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = testing_support::random_sphere_points(rng, 3, 7);
    const auto rot = testing_support::random_rotation(rng, 3);
    auto q = testing_support::apply(rot, p);
    std::shuffle(q.begin(), q.end(), rng);
    const auto a = canonical_vertices(p);
    const auto b = canonical_vertices(q);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t r = 0; r < 3; ++r) EXPECT_NEAR(a[k][r], b[k][r], 1e-8);
  }
}

TEST(Certify, StationaryOptimaHaveNoViolation) {
  const auto a = certify(optimal_dplus3(4), 500, 1e-2, 0);
  EXPECT_TRUE(a.stationary);
  EXPECT_FALSE(a.violated);
  EXPECT_GT(a.evaluated, 400u);
  const auto b = certify(cyclic_trig(4, 7), 500, 1e-2, 0);
  EXPECT_TRUE(b.stationary);
  EXPECT_FALSE(b.violated);
}

TEST(Certify, NonStationaryIsViolated) {
  auto v = cross_polytope(3).vertices();
  v[0] = {std::cos(0.1), std::sin(0.1), 0.0};
  const auto c = certify(InscribedPolytope(3, v), 500, 1e-2, 0);
  EXPECT_FALSE(c.stationary);
  EXPECT_TRUE(c.violated);
}

TEST(CompareEvenD, Examples) {
  auto cfg = config(4, 7, 20);
  const auto d4 = compare_even_d(4, cfg);
  EXPECT_NEAR(d4.product_volume, std::sqrt(3.0) / 4.0, 1e-12);
  EXPECT_NEAR(d4.cyclic_volume, c47_volume(), 1e-12);
  EXPECT_TRUE(d4.product_beats_cyclic);
  EXPECT_FALSE(d4.experimental);
  EXPECT_GE(d4.optimizer_volume, d4.product_volume - 1e-6);
  EXPECT_EQ(d4.ordered.front().second, std::max({d4.cyclic_volume, d4.product_volume, d4.optimizer_volume}));

  const auto d6 = compare_even_d(6, config(6, 9, 5));
  EXPECT_TRUE(d6.product_beats_cyclic);
  EXPECT_NEAR(d6.product_volume, 9.0 * std::sqrt(3.0) / 640.0, 1e-12);

  const auto d8 = compare_even_d(8, config(8, 11, 2));
  EXPECT_TRUE(d8.experimental);
  EXPECT_THROW(compare_even_d(5, cfg), PreconditionError);
}
