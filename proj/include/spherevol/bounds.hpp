#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spherevol/constructions.hpp"

namespace spherevol {

/// Volume of the regular k-simplex inscribed in S^{k-1}:
/// (k+1)^{(k+1)/2} / (k^{k/2} k!).
double v_simplex(std::size_t k);

/// (prod k_i!) / d! * prod v_simplex(k_i): the volume of the orthogonal
/// product of regular simplices.
double product_volume(const SimplexFactorSpec& spec);

/// Maximum volume with d+2 vertices (balanced two-way split).
double v_dplus2(std::size_t d);

/// Balanced three-way split value with d+3 vertices. The maximum for odd d;
/// for even d the best non-cyclic stationary value.
double v_dplus3(std::size_t d);

double c47_volume();
double c69_volume();

/// Regular n-gon area (n/2) sin(2 pi / n), the planar optimum.
double polygon_area(std::size_t n);

struct VolumeRecord {
  std::size_t d = 0;
  std::size_t n = 0;
  double value = 0.0;
  std::string formula_id;
  std::string construction;  // empty when there is none
  std::string status;        // "proven maximum", "conjectural global / certified non-cyclic local", ...
};

/// Closed-form values available for (d, n), strongest first.
std::vector<VolumeRecord> closed_form_records(std::size_t d, std::size_t n);

/// The proven optimum for (d, n) when one is known: n = d+1, n = d+2,
/// n = d+3 with d odd, and every planar n.
std::optional<double> known_optimum(std::size_t d, std::size_t n);

}  // namespace spherevol
