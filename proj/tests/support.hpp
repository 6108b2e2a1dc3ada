#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "spherevol/numerics.hpp"
#include "spherevol/polytope.hpp"

namespace testing_support {

using spherevol::Matrix;
using spherevol::Vec;

inline Vec random_unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(d);
  double n = 0.0;
  while (n < 1e-3) {
    for (double& x : v) x = g(rng);
    n = spherevol::norm(v);
  }
  for (double& x : v) x /= n;
  return v;
}

inline std::vector<Vec> random_sphere_points(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_unit(rng, d));
  return pts;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

// Random orthogonal matrix from Gram-Schmidt on Gaussian columns.
inline Matrix random_rotation(std::mt19937_64& rng, std::size_t d) {
  std::vector<Vec> cols;
  while (cols.size() < d) {
    Vec v = random_unit(rng, d);
    for (const auto& c : cols) {
      const double a = spherevol::dot(v, c);
      for (std::size_t k = 0; k < d; ++k) v[k] -= a * c[k];
    }
    const double n = spherevol::norm(v);
    if (n < 1e-6) continue;
    for (double& x : v) x /= n;
    cols.push_back(v);
  }
  return Matrix::from_columns(cols);
}

inline std::vector<Vec> apply(const Matrix& r, const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back(r * std::span<const double>(p));
  return out;
}

// Random inscribed polytope; retries until the points are valid.
inline spherevol::InscribedPolytope random_polytope(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  while (true) {
    try {
      spherevol::InscribedPolytope p(d, random_sphere_points(rng, d, n));
      return p;
    } catch (const std::exception&) {
    }
  }
}

// Random polytope that contains the origin strictly.
inline spherevol::InscribedPolytope random_polytope_with_origin(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  while (true) {
    auto p = random_polytope(rng, d, n);
    if (spherevol::origin_interior(spherevol::enumerate_facets(p), 1e-3)) return p;
  }
}

}  // namespace testing_support
