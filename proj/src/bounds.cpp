#include "spherevol/bounds.hpp"

#include <cmath>
#include <numbers>

#include "spherevol/errors.hpp"

namespace spherevol {

double v_simplex(std::size_t k) {
  if (k == 0) throw PreconditionError("v_simplex needs k >= 1");
  const double kd = static_cast<double>(k);
  return std::pow(kd + 1.0, (kd + 1.0) / 2.0) / (std::pow(kd, kd / 2.0) * static_cast<double>(factorial(k)));
}

double product_volume(const SimplexFactorSpec& spec) {
  double v = 1.0 / static_cast<double>(factorial(spec.total()));
  for (auto k : spec.dims()) v *= static_cast<double>(factorial(k)) * v_simplex(k);
  return v;
}

double v_dplus2(std::size_t d) { return product_volume(balanced_split2(d)); }

double v_dplus3(std::size_t d) { return product_volume(balanced_split3(d)); }

double c47_volume() {
  using std::numbers::pi;
  return 49.0 / 192.0 * (std::cos(pi / 7.0) + std::cos(2.0 * pi / 7.0));
}

double c69_volume() {
  using std::numbers::pi;
  return 7.0 / 576.0 * std::sin(pi / 9.0) - 7.0 / 2880.0 * std::sin(4.0 * pi / 9.0) + 7.0 / 1152.0 * std::sin(2.0 * pi / 9.0);
}

double polygon_area(std::size_t n) {
  if (n < 3) throw PreconditionError("polygon needs n >= 3");
  const double nd = static_cast<double>(n);
  return nd / 2.0 * std::sin(2.0 * std::numbers::pi / nd);
}

std::vector<VolumeRecord> closed_form_records(std::size_t d, std::size_t n) {
  std::vector<VolumeRecord> out;
  if (d == 2 && n >= 3) out.push_back({d, n, polygon_area(n), "polygon_area", "polygon", "proven maximum"});
  if (n == d + 1 && d >= 1 && d != 2) out.push_back({d, n, v_simplex(d), "v_simplex", "simplex", "proven maximum"});
  if (n == d + 2 && d >= 3) out.push_back({d, n, v_dplus2(d), "v_dplus2", "dplus2", "proven maximum"});
  if (n == d + 3 && d >= 3) {
    const bool odd = d % 2 == 1;
    out.push_back({d, n, v_dplus3(d), "v_dplus3", "dplus3",
                   odd ? "proven maximum" : "conjectural global / certified non-cyclic local"});
    if (d == 4) out.push_back({d, n, c47_volume(), "c47_volume", "cyclic", "symmetric cyclic"});
    if (d == 6) out.push_back({d, n, c69_volume(), "c69_volume", "cyclic", "symmetric cyclic"});
  }
  return out;
}

std::optional<double> known_optimum(std::size_t d, std::size_t n) {
  for (const auto& r : closed_form_records(d, n))
    if (r.status == "proven maximum") return r.value;
  return std::nullopt;
}

}  // namespace spherevol
