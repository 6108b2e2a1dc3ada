#pragma once

#include <cstddef>
#include <vector>

#include "spherevol/numerics.hpp"
#include "spherevol/polytope.hpp"

namespace spherevol {

/// Dimensions k_1, ..., k_r of regular simplices placed in mutually orthogonal
/// coordinate blocks; the ambient dimension is their sum.
class SimplexFactorSpec {
 public:
  explicit SimplexFactorSpec(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total() const { return total_; }
  std::size_t vertex_count() const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 0;
};

/// k+1 unit vectors in R^k with pairwise inner products -1/k and centroid o.
std::vector<Vec> regular_simplex(std::size_t k);

InscribedPolytope regular_simplex_polytope(std::size_t k);

/// Factor j occupies the coordinates following those of factors < j.
InscribedPolytope orthogonal_simplex_product(const SimplexFactorSpec& spec);

/// floor(d/2), ceil(d/2) split; d >= 2.
SimplexFactorSpec balanced_split2(std::size_t d);
/// Three parts in {floor(d/3), ceil(d/3)}, ascending; d >= 3.
SimplexFactorSpec balanced_split3(std::size_t d);

InscribedPolytope optimal_dplus2(std::size_t d);
InscribedPolytope optimal_dplus3(std::size_t d);

/// Inscribed cyclic polytope C_d(n): vertex i is
/// sqrt(2/d) (cos t, sin t, cos 2t, sin 2t, ..., cos (d/2)t, sin (d/2)t)
/// with t = 2 pi i / n. Requires d even and n >= d+3.
InscribedPolytope cyclic_trig(std::size_t d, std::size_t n);

/// Regular n-gon on the unit circle, vertex i at angle 2 pi i / n.
InscribedPolytope regular_polygon(std::size_t n);

/// Base embedded in the first d-1 coordinates plus apexes +-e_d.
InscribedPolytope bipyramid(const InscribedPolytope& base);

/// +-e_1, ..., +-e_d in that order.
InscribedPolytope cross_polytope(std::size_t d);

/// A regular triangle and two diameters in mutually orthogonal subspaces.
InscribedPolytope p4();
/// Three regular triangles in mutually orthogonal planes of R^6.
InscribedPolytope p6();

/// The six-vertex 3-polytope with dihedral symmetry listed among the
/// D_n-symmetric examples, vertices in the listed order.
InscribedPolytope remark54_3polytope();

}  // namespace spherevol
