#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"
#include "spherevol/polytope.hpp"
#include "support.hpp"

using namespace spherevol;

namespace {

InscribedPolytope square() { return InscribedPolytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

InscribedPolytope square_pyramid() {
  const double r = std::sqrt(0.75);
  return InscribedPolytope(3, {{0, 0, 1}, {r, 0, -0.5}, {0, r, -0.5}, {-r, 0, -0.5}, {0, -r, -0.5}});
}

InscribedPolytope cube() {
  std::vector<Vec> v;
  const double s = 1.0 / std::sqrt(3.0);
  for (int m = 0; m < 8; ++m) v.push_back({(m & 1) ? s : -s, (m & 2) ? s : -s, (m & 4) ? s : -s});
  return InscribedPolytope(3, v);
}

double shoelace(const std::vector<Vec>& pts) {
  auto p = pts;
  std::sort(p.begin(), p.end(), [](const Vec& a, const Vec& b) { return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]); });
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % p.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * std::abs(s);
}

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Divergence theorem: sum over support planes of offset * area / 3, with
// planes found from scratch over all vertex triples.
double divergence_volume(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::pair<Vec, double>> planes;
  double vol = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vec nrm = cross3(subtract(pts[b], pts[a]), subtract(pts[c], pts[a]));
        const double len = norm(nrm);
        if (len < 1e-9) continue;
        for (double& x : nrm) x /= len;
        double off = dot(nrm, pts[a]);
        int above = 0, below = 0;
        for (const auto& p : pts) {
          const double h = dot(nrm, p) - off;
          if (h > 1e-9) ++above;
          if (h < -1e-9) ++below;
        }
        if (above && below) continue;
        if (above) {
          for (double& x : nrm) x = -x;
          off = -off;
        }
        bool seen = false;
        for (const auto& [m, o] : planes) seen = seen || (distance(m, nrm) < 1e-7 && std::abs(o - off) < 1e-7);
        if (seen) continue;
        planes.push_back({nrm, off});
        // Polygon area: sort the plane's points by angle around their centroid.
        std::vector<Vec> face;
        for (const auto& p : pts)
          if (std::abs(dot(nrm, p) - off) <= 1e-9) face.push_back(p);
        Vec ctr(3, 0.0);
        for (const auto& p : face)
          for (int k = 0; k < 3; ++k) ctr[k] += p[k] / face.size();
        const Vec u = normalized(subtract(face[0], ctr));
        const Vec w = cross3(nrm, u);
        std::sort(face.begin(), face.end(), [&](const Vec& x, const Vec& y) {
          const Vec dx = subtract(x, ctr), dy = subtract(y, ctr);
          return std::atan2(dot(dx, w), dot(dx, u)) < std::atan2(dot(dy, w), dot(dy, u));
        });
        double area = 0.0;
        for (std::size_t i = 0; i < face.size(); ++i)
          area += 0.5 * dot(nrm, cross3(subtract(face[i], ctr), subtract(face[(i + 1) % face.size()], ctr)));
        vol += off * area / 3.0;
      }
  return vol;
}

std::set<std::vector<std::size_t>> facet_sets(const std::vector<Facet>& f) {
  std::set<std::vector<std::size_t>> s;
  for (const auto& x : f) s.insert(x.vertex_indices);
  return s;
}

}  // namespace

TEST(InscribedPolytope, RejectsBadInput) {
  EXPECT_THROW(InscribedPolytope(2, {{1, 0}, {0, 1}}), ValidationError);
  EXPECT_THROW(InscribedPolytope(2, {{1, 0}, {0, 1}, {0.5, 0.5}}), PreconditionError);
  EXPECT_THROW(InscribedPolytope(2, {{1, 0}, {0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(InscribedPolytope(2, {{1, 0}, {0, 1, 0}, {-1, 0}}), DimensionError);
  EXPECT_THROW(InscribedPolytope(3, {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}}), DimensionError);
  EXPECT_THROW(InscribedPolytope(2, {{1, 0}, {0, 1}, {NAN, 0}}), ValidationError);
  EXPECT_NO_THROW(InscribedPolytope::normalized(2, {{2, 0}, {0, 3}, {-1, -1}}));
}

TEST(EnumerateFacets, Tetrahedron) {
  const auto f = enumerate_facets(regular_simplex_polytope(3));
  ASSERT_EQ(f.size(), 4u);
  for (const auto& x : f) EXPECT_EQ(x.vertex_indices.size(), 3u);
}

TEST(EnumerateFacets, Octahedron) {
  const auto f = enumerate_facets(cross_polytope(3));
  ASSERT_EQ(f.size(), 8u);
  for (const auto& x : f) EXPECT_EQ(x.vertex_indices.size(), 3u);
}

TEST(EnumerateFacets, Square) { EXPECT_EQ(enumerate_facets(square()).size(), 4u); }

TEST(EnumerateFacets, CubeMergesCoplanarVertices) {
  const auto f = enumerate_facets(cube());
  ASSERT_EQ(f.size(), 6u);
  for (const auto& x : f) {
    EXPECT_EQ(x.vertex_indices.size(), 4u);
    EXPECT_NEAR(x.offset, 1.0 / std::sqrt(3.0), 1e-12);
  }
}

TEST(EnumerateFacetsProperty, IndependentOfInputOrder) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const auto p = testing_support::random_polytope(rng, d, d + 3 + rep % 3);
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vec> shuffled;
    for (auto k : perm) shuffled.push_back(p.vertex(k));
    const auto a = facet_sets(enumerate_facets(p));
    std::set<std::vector<std::size_t>> b;
    for (const auto& f : enumerate_facets(InscribedPolytope(d, shuffled))) {
      std::vector<std::size_t> back;
      for (auto k : f.vertex_indices) back.push_back(perm[k]);
      std::sort(back.begin(), back.end());
      b.insert(back);
    }
    EXPECT_EQ(a, b);
  }
}

TEST(TriangulateBoundary, SimplexAndSquareArePositive) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto p = regular_simplex_polytope(d);
    const auto c = triangulate_boundary(p);
    EXPECT_EQ(c.simplices.size(), d + 1);
  }
  const auto sq = square();
  const auto c = triangulate_boundary(sq);
  ASSERT_EQ(c.simplices.size(), 4u);
  for (const auto& s : c.simplices)
    EXPECT_GT(determinant(Matrix::from_columns({sq.vertex(s[0]), sq.vertex(s[1])})), 0.0);
}

TEST(TriangulateBoundary, P4IsSimplicial) {
  const auto c = triangulate_boundary(p4());
  EXPECT_EQ(c.simplices.size(), c.facets.size());
}

TEST(TriangulateBoundaryProperty, EveryDeterminantPositive) {
  std::mt19937_64 rng(22);
  std::vector<InscribedPolytope> polys{cube(), square_pyramid(), cross_polytope(4), p4(), p6(), cyclic_trig(4, 7),
                                       remark54_3polytope()};
  for (int rep = 0; rep < 40; ++rep) polys.push_back(testing_support::random_polytope_with_origin(rng, 2 + rep % 4, 7));
  for (const auto& p : polys) {
    const auto c = triangulate_boundary(p);
    for (const auto& s : c.simplices) {
      std::vector<Vec> cols;
      for (auto k : s) cols.push_back(p.vertex(k));
      EXPECT_GT(determinant(Matrix::from_columns(cols)), 0.0);
    }
  }
}

TEST(TriangulateBoundaryProperty, InvariantUnderPullingOrder) {
  std::vector<InscribedPolytope> polys{cube(), square_pyramid(), cross_polytope(4), p4(), p6(), optimal_dplus2(5)};
  for (const auto& p : polys) {
    std::vector<std::size_t> fwd(p.size()), rev(p.size());
    std::iota(fwd.begin(), fwd.end(), 0);
    for (std::size_t k = 0; k < p.size(); ++k) rev[k] = p.size() - 1 - k;
    const double a = volume(p, triangulate_boundary(p, fwd));
    const double b = volume(p, triangulate_boundary(p, rev));
    EXPECT_NEAR(a, b, 1e-12);
  }
  // The cube has quadrilateral facets: the two orders pick different diagonals.
  const auto c = cube();
  std::vector<std::size_t> fwd(8), rev(8);
  std::iota(fwd.begin(), fwd.end(), 0);
  for (std::size_t k = 0; k < 8; ++k) rev[k] = 7 - k;
  EXPECT_NE(triangulate_boundary(c, fwd).simplices, triangulate_boundary(c, rev).simplices);
}

TEST(Volume, Examples) {
  EXPECT_NEAR(volume(cross_polytope(3)), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(volume(square()), 2.0, 1e-14);
  EXPECT_NEAR(volume(p4()), std::sqrt(3.0) / 4.0, 1e-14);
  EXPECT_NEAR(volume(cube()), 8.0 / (3.0 * std::sqrt(3.0)), 1e-14);
}

TEST(Volume, OriginOutsideIsUnsupported) {
  const auto cap = InscribedPolytope::normalized(2, {{1, 0.1}, {1, 0.2}, {1, -0.3}});
  EXPECT_THROW(volume(cap), UnsupportedError);
  EXPECT_GT(hull_volume(cap), 0.0);
}

TEST(VolumeProperty, MatchesIndependentOracles) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 3 + rep % 6;
    const auto p = testing_support::random_polytope_with_origin(rng, 2, n);
    EXPECT_NEAR(volume(p), shoelace(p.vertices()), 1e-9);
  }
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 4 + rep % 5;
    const auto p = testing_support::random_polytope_with_origin(rng, 3, n);
    EXPECT_NEAR(volume(p), divergence_volume(p.vertices()), 1e-9);
  }
  EXPECT_NEAR(volume(cube()), divergence_volume(cube().vertices()), 1e-12);
  EXPECT_NEAR(volume(square_pyramid()), divergence_volume(square_pyramid().vertices()), 1e-12);
}

TEST(VolumeProperty, HullVolumeAgreesWhenOriginInside) {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 50; ++rep) {
    const auto p = testing_support::random_polytope_with_origin(rng, 2 + rep % 4, 8);
    EXPECT_NEAR(volume(p), hull_volume(p), 1e-12);
  }
}

TEST(IsSimplicial, Examples) {
  EXPECT_TRUE(is_simplicial(cross_polytope(4)));
  EXPECT_FALSE(is_simplicial(square_pyramid()));
  EXPECT_TRUE(is_simplicial(cyclic_trig(4, 7)));
}

TEST(EdgeGraph, Examples) {
  const auto s = edge_graph(regular_simplex_polytope(4));
  EXPECT_EQ(s.edge_count(), 10u);
  const auto o = edge_graph(cross_polytope(3));
  EXPECT_EQ(o.edge_count(), 12u);
  EXPECT_FALSE(o.adjacent(0, 1));  // e1 and -e1
  EXPECT_TRUE(o.adjacent(0, 2));
  const auto q = edge_graph(square());
  EXPECT_EQ(q.edge_count(), 4u);
  EXPECT_TRUE(q.adjacent(0, 1));
  EXPECT_FALSE(q.adjacent(0, 2));
  const auto c = edge_graph(cube());
  EXPECT_EQ(c.edge_count(), 12u);
}

TEST(DistanceProfile, Examples) {
  for (const auto& s : distance_profile(cyclic_trig(4, 7), identity_ordering(7))) EXPECT_LE(s.spread, 1e-12);
  const auto pent = distance_profile(regular_polygon(5), identity_ordering(5));
  ASSERT_EQ(pent.size(), 2u);
  for (const auto& s : pent) EXPECT_LE(s.spread, 1e-12);

  std::mt19937_64 rng(25);
  const auto r = distance_profile(testing_support::random_polytope(rng, 4, 7), identity_ordering(7));
  double worst = 0.0;
  for (const auto& s : r) worst = std::max(worst, s.spread);
  EXPECT_GT(worst, 0.0);
}

TEST(DistanceProfile, RejectsNonPermutation) {
  EXPECT_THROW(distance_profile(regular_polygon(5), {0, 1, 2, 3, 3}), PreconditionError);
}
