#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spherevol/numerics.hpp"
#include "spherevol/polytope.hpp"

namespace spherevol {

inline constexpr double kPropertyZTol = 1e-8;

/// Force acting on one vertex: m = sum_F A(F,p) m(F,p) over the boundary
/// simplices F through p. A(F,p) is the (d-1)-volume of conv((F u {o}) \ {p})
/// and m(F,p) the unit normal of its span, oriented toward p.
struct VertexForce {
  std::size_t vertex = 0;
  Vec force;
  std::vector<std::size_t> simplices;  // indices into FacetComplex::simplices
  Vec weights;
  std::vector<Vec> normals;
  std::size_t degenerate = 0;  // simplices skipped because <m(F,p), p> vanished
  double residual = 0.0;       // |m/|m| - p|, in [0, 2]
};

VertexForce vertex_force(const InscribedPolytope& p, const FacetComplex& c, std::size_t i);

struct StationarityReport {
  std::vector<VertexForce> vertices;
  double max_residual = 0.0;
  double tol = kPropertyZTol;
  bool satisfies = false;
  /// Which certificate was computed; only the first-order condition here.
  std::string test = "first-order residual |m/|m| - p|";
};

/// Checks the first-order condition p = m/|m| at every vertex. Requires the
/// origin strictly inside (UnsupportedError otherwise).
StationarityReport check_property_z(const InscribedPolytope& p, double tol = kPropertyZTol);
StationarityReport check_property_z(const InscribedPolytope& p, const FacetComplex& c, double tol = kPropertyZTol);

/// |sum_i vol_{s-1}(F_i) n_i| over the facets of a simplex given by s+1
/// points in R^s, n_i the outward unit normals. Zero for every simplex.
double facet_normal_balance(const std::vector<Vec>& simplex);

struct EdgeComparison {
  bool equal = false;
  double inner_product_gap = 0.0;  // |<p_i,p_j1> - <p_i,p_j2>|
  double length_gap = 0.0;         // ||p_i-p_j1| - |p_i-p_j2||
};

/// Compares the edges {i,j1} and {i,j2}. Both must be edges of p
/// (PreconditionError otherwise); equality is judged at 1e-9 on lengths.
EdgeComparison equal_edge_check(const InscribedPolytope& p, std::size_t i, std::size_t j1, std::size_t j2);

}  // namespace spherevol
