#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherevol/polytope.hpp"
#include "spherevol/stationarity.hpp"

namespace spherevol {

struct OptimizerConfig {
  std::size_t dim = 3;
  std::size_t nverts = 6;
  std::size_t starts = 50;
  std::size_t max_iters = 2000;
  double alpha = 0.5;      // damping in (0, 1]
  double move_tol = 1e-10; // convergence: max vertex displacement in a sweep
  std::uint64_t seed = 0;
  unsigned threads = 0;    // 0: hardware concurrency
  bool keep_trajectories = true;

  void validate() const;
};

struct StartTrajectory {
  std::size_t start = 0;
  Vec volumes;  // hull volume after every sweep, starting with the initial one
  std::size_t iterations = 0;
  std::size_t resamples = 0;
  bool converged = false;
  double final_volume = 0.0;
  std::vector<Vec> final_vertices;
  std::string failure;  // non-empty when the start was abandoned
};

struct OptimizerResult {
  InscribedPolytope best;
  double best_volume = 0.0;
  std::size_t best_start = 0;
  std::vector<StartTrajectory> starts;
  std::optional<StationarityReport> stationarity;  // empty when o is not interior
};

/// Multi-start damped fixed-point ascent: each sweep moves every vertex
/// p <- normalize((1 - alpha) p + alpha m/|m|) using the force of the current
/// boundary triangulation, then re-hulls. Start s is seeded with seed + s, so
/// results do not depend on scheduling. Among starts whose volume is within
/// 1e-9 of the best, the one with the lexicographically smallest canonical
/// vertex list wins.
OptimizerResult ascend(const OptimizerConfig& config);

/// Runs a single start from the given vertices (exposed for testing).
StartTrajectory ascend_from(const OptimizerConfig& config, std::vector<Vec> start, std::size_t start_index = 0);

/// Volume gradient force m_i = sum over boundary simplices through i of the
/// cofactor vectors / (d-1)!. Agrees with vertex_force().force whenever the
/// origin is interior, and stays meaningful when it is not.
Vec signed_force(const std::vector<Vec>& vertices, const FacetComplex& c, std::size_t i);

/// Principal-axis aligned, sign-fixed, lexicographically sorted vertex list.
std::vector<Vec> canonical_vertices(const std::vector<Vec>& vertices);

struct Certificate {
  double residual = 0.0;
  bool stationary = false;
  std::size_t samples = 0;
  std::size_t evaluated = 0;
  double radius = 0.0;
  double worst_violation = 0.0;  // max over samples of vol(perturbed) - vol(p)
  bool violated = false;         // worst_violation > 1e-12
};

/// First-order residual plus sampled single-vertex perturbations on the
/// sphere of angular size at most `radius`.
Certificate certify(const InscribedPolytope& p, std::size_t samples, double radius, std::uint64_t seed = 0,
                    double tol = kPropertyZTol);

struct EvenDComparison {
  std::size_t d = 0;
  std::size_t n = 0;
  double cyclic_volume = 0.0;
  double product_volume = 0.0;
  double optimizer_volume = 0.0;
  bool product_beats_cyclic = false;
  bool experimental = false;  // no published value to compare against
  std::vector<std::pair<std::string, double>> ordered;  // descending by volume
};

/// C_d(d+3) against the three-simplex product and the optimizer's best, for
/// even d in {4, 6, 8}.
EvenDComparison compare_even_d(std::size_t d, OptimizerConfig config);

}  // namespace spherevol
