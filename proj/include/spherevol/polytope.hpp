#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spherevol/numerics.hpp"

namespace spherevol {

inline constexpr double kOnSphereTol = 1e-9;
inline constexpr double kCoplanarTol = 1e-9;

/// A full-dimensional polytope in R^d whose vertices lie on the unit sphere.
/// Immutable once constructed; the constructor enforces the invariants.
class InscribedPolytope {
 public:
  /// Validates: |p_i| = 1 within kOnSphereTol, n >= d+1, pairwise distinct,
  /// and the vertices affinely span R^d. Throws DimensionError or
  /// PreconditionError otherwise.
  InscribedPolytope(std::size_t dim, std::vector<Vec> vertices);

  /// Rescales every vertex onto the sphere first, then validates.
  static InscribedPolytope normalized(std::size_t dim, std::vector<Vec> vertices);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const Vec& vertex(std::size_t i) const { return vertices_[i]; }

 private:
  std::size_t dim_;
  std::vector<Vec> vertices_;
};

struct Facet {
  std::vector<std::size_t> vertex_indices;  // sorted
  Vec outward_normal;                       // unit
  double offset = 0.0;                      // <normal, p> on the facet
};

/// Oriented simplicial triangulation of the boundary. Each simplex is a
/// d-tuple of vertex indices ordered so that det|p_i1, ..., p_id| > 0 whenever
/// the origin is interior.
struct FacetComplex {
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::vector<Facet> facets;
  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> facet_of;  // parent facet of each simplex
};

/// Facets of the convex hull of full-dimensional points in R^k (k = point
/// dimension), found by brute force over k-subsets. Coplanar vertices within
/// `tol` are merged into a single facet. Output sorted by vertex index set.
std::vector<Facet> hull_facets(const std::vector<Vec>& points, double tol = kCoplanarTol);

std::vector<Facet> enumerate_facets(const InscribedPolytope& p);

/// Boundary triangulation. Non-simplicial facets are triangulated by
/// recursive pulling from their least vertex under `pull_rank` (defaults to
/// lexicographic order of vertex coordinates).
FacetComplex triangulate_boundary(const InscribedPolytope& p,
                                  const std::optional<std::vector<std::size_t>>& pull_rank = std::nullopt);

/// Volume as the sum of facial simplices conv{o, p_i1..p_id}. Throws
/// UnsupportedError when the origin is not strictly interior.
double volume(const InscribedPolytope& p);
double volume(const InscribedPolytope& p, const FacetComplex& c);

/// Volume coned from the vertex centroid instead of the origin; valid for any
/// full-dimensional vertex set, interior origin or not.
double hull_volume(const InscribedPolytope& p, const FacetComplex& c);
double hull_volume(const InscribedPolytope& p);

bool origin_interior(const std::vector<Facet>& facets, double margin = 1e-12);

bool is_simplicial(const InscribedPolytope& p);
bool is_simplicial(const std::vector<Facet>& facets, std::size_t dim);

struct EdgeGraph {
  std::vector<std::vector<std::size_t>> neighbors;  // sorted

  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t edge_count() const;
};

EdgeGraph edge_graph(const InscribedPolytope& p);
EdgeGraph edge_graph(const std::vector<Facet>& facets, std::size_t vertex_count);

struct ShiftDistances {
  std::size_t shift = 0;
  Vec distances;  // |p_{o(i+k)} - p_{o(i)}| for i = 0..n-1
  double spread = 0.0;
};

/// Distances between vertices k apart in the cyclic `ordering`, k = 1..n/2.
std::vector<ShiftDistances> distance_profile(const InscribedPolytope& p, const std::vector<std::size_t>& ordering);

std::vector<std::size_t> identity_ordering(std::size_t n);

}  // namespace spherevol
