#pragma once

#include <cstddef>
#include <vector>

#include "spherevol/numerics.hpp"
#include "spherevol/polytope.hpp"

namespace spherevol {

inline constexpr double kCoincidenceTol = 1e-7;
inline constexpr double kAngularMergeTol = 1e-6;
inline constexpr double kRelintMargin = 1e-9;

/// n labeled points in R^{n-d-1}. labels[k] is the polytope vertex that
/// points[k] represents.
struct GaleDiagram {
  std::size_t codim = 0;
  std::vector<Vec> points;
  std::vector<std::size_t> labels;

  /// Groups of point positions (indices into `points`) closer than
  /// kCoincidenceTol to each other.
  std::vector<std::vector<std::size_t>> coincident_groups() const;
};

/// The (d+1) x n matrix whose columns are the homogenized vertices.
Matrix vertex_matrix(const InscribedPolytope& p);

/// Rows of an orthonormal kernel basis of vertex_matrix(p).
GaleDiagram gale_transform(const InscribedPolytope& p);

/// The n x (n-d-1) matrix of a Gale transform (rows are the diagram points).
Matrix transform_matrix(const GaleDiagram& g);

/// Whether o lies in the relative interior of conv(points), i.e. o is a
/// combination with every coefficient at least kRelintMargin.
bool origin_in_relint(const std::vector<Vec>& points, std::size_t dim);

/// conv of the given vertices is a face iff o is in the relative interior of
/// the complementary diagram points. `subset` must be a proper subset.
bool is_face(const GaleDiagram& diag, const std::vector<std::size_t>& subset);

struct DiagramValidity {
  bool valid = false;
  Vec witness;  // normal of an open half-space holding fewer than two points
};

/// Every open half-space through o holds at least two points (or all points
/// are o). Supports codim <= 2; UnsupportedError beyond.
DiagramValidity validate_diagram(const GaleDiagram& diag);

struct DiagramPredicates {
  bool simplicial = false;
  bool pyramid = false;
};

DiagramPredicates diagram_predicates(const GaleDiagram& diag);

struct ContractedDiagram {
  GaleDiagram diagram;
  bool contracted = false;  // false: only normalized (pyramid or non-simplicial)
  /// codim 1: multiplicities of -1 and +1. codim 2: multiplicities of the
  /// regular-polygon vertices in counterclockwise order from angle 0.
  std::vector<std::size_t> multiplicities;
};

/// Normalizes and merges diameters into the standard form with the fewest
/// diameters. codim 1 maps onto {-1, +1}; codim 2 onto a regular (2k+1)-gon
/// when the polytope is simplicial.
ContractedDiagram contract_diagram(const GaleDiagram& diag);

}  // namespace spherevol
