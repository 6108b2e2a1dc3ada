#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spherevol/numerics.hpp"

namespace spherevol {

/// Gram matrix of unit vectors with contact weights lambda_k.
struct GramSystem {
  Matrix gram;
  Vec lambdas;
  /// First-row cosines (a, b, c, ...) when gram is a symmetric circulant.
  std::optional<Vec> circulant_params;

  std::size_t size() const { return gram.rows(); }
};

Matrix gram_matrix(const std::vector<Vec>& points);

/// Symmetric circulant with first row (1, a, b, ..., b, a); params holds
/// the (n-1)/2 distinct off-diagonal values for odd n.
Matrix symmetric_circulant(std::size_t n, const Vec& params);

/// Validates symmetry, unit diagonal, entries in [-1, 1], lambda >= 0 and,
/// when params are given, the circulant structure.
GramSystem make_gram_system(Matrix gram, Vec lambdas, std::optional<Vec> params = std::nullopt);

struct LoewnerResiduals {
  double vector_residual = 0.0;  // max |sum lambda_k u_k|
  double tensor_residual = 0.0;  // max |sum lambda_k u_k u_k^T - Id|
  bool satisfied(double tol) const { return vector_residual <= tol && tensor_residual <= tol; }
};

/// Contact-point conditions for the unit ball to be the Loewner ellipsoid.
LoewnerResiduals loewner_check(const std::vector<Vec>& points, const Vec& lambdas);

struct GramResiduals {
  double vector_residual = 0.0;   // max |G Lambda_v|
  double product_residual = 0.0;  // max |G Lambda_m G - G|
  bool satisfied(double tol) const { return vector_residual <= tol && product_residual <= tol; }
};

/// The same conditions restated on the Gram matrix; equivalent to
/// loewner_check whenever the points span R^d.
GramResiduals gram_check(const GramSystem& g);

enum class ShapeKind { regular_simplex, regular_polygon, cyclic4, cyclic6, simplex_product, unknown };

struct Identification {
  ShapeKind kind = ShapeKind::unknown;
  std::string label;  // e.g. "C_4(7)", "regular simplex in R^6", "unknown"
};

/// Classifies a point set (one point per column, as from psd_factor) against
/// the reference constructions by Gram-matrix equality, up to relabeling
/// i -> s i + t mod n, within 1e-8. Never guesses: no match gives unknown.
Identification identify_realization(const Matrix& points);
Identification identify_realization(const std::vector<Vec>& points);

struct CirculantSolution {
  std::size_t n = 0;
  Vec params;                        // (a, b, c, ...) of the representative
  std::vector<std::size_t> frequencies;  // active Fourier frequencies of the representative
  double lambda = 0.0;
  double constraint_residual = 0.0;  // |1 + 2 sum params|
  GramResiduals residuals;
  std::size_t rank = 0;
  Matrix realization;                // rank x n, points as columns
  Identification identification;
  std::string reason;                // "", "coinciding points", "not realizable"
};

/// All symmetric circulant Gram matrices of order n (odd) with equal weights
/// satisfying G Lambda_v = 0 and G Lambda_m G = G. Each Fourier eigenvalue must
/// be 0 or 1/lambda; the zero frequency is forced to 0 and the trace fixes
/// lambda. Solutions equal up to permutation of the parameters are merged.
std::vector<CirculantSolution> solve_symmetric_circulant(std::size_t n);

/// The 7 x 7 case.
std::vector<CirculantSolution> solve_symmetric_d4();

struct ListedSolution {
  std::string name;
  GramResiduals residuals;
  std::size_t rank = 0;
  Identification identification;
  double natural_order_spread = 0.0;  // max distance-profile spread, natural order
  double best_order_spread = 0.0;     // after interleaving, where applicable
};

struct D6Report {
  std::vector<ListedSolution> listed;
  std::vector<CirculantSolution> enumeration;  // n = 9 circulant solutions with reason codes
  /// Listed solutions that are 6-dimensional cyclic polytopes.
  std::vector<std::string> cyclic_in_r6;
};

/// Checks the 9-vertex solutions: regular simplex in R^8, C_2(9), C_4(9),
/// C_6(9) and the product of three triangles.
D6Report verify_symmetric_d6();

}  // namespace spherevol
