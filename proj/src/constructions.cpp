#include "spherevol/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spherevol/errors.hpp"

namespace spherevol {

SimplexFactorSpec::SimplexFactorSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw PreconditionError("simplex factor spec needs at least one factor");
  for (auto k : dims_) {
    if (k == 0) throw PreconditionError("simplex factor dimensions must be positive");
    total_ += k;
  }
}

std::size_t SimplexFactorSpec::vertex_count() const {
  std::size_t n = 0;
  for (auto k : dims_) n += k + 1;
  return n;
}

std::vector<Vec> regular_simplex(std::size_t k) {
  if (k == 0) throw PreconditionError("regular simplex needs k >= 1");
  // Coordinates of e_j - centroid in the Helmert basis of {x : sum x = 0},
  // u_i = (1, ..., 1, -i, 0, ...) / sqrt(i (i+1)), rescaled to unit length.
  const double scale = std::sqrt(static_cast<double>(k + 1) / static_cast<double>(k));
  std::vector<Vec> pts(k + 1, Vec(k, 0.0));
  for (std::size_t j = 0; j <= k; ++j) {
    for (std::size_t i = 1; i <= k; ++i) {
      const double inv = 1.0 / std::sqrt(static_cast<double>(i * (i + 1)));
      double c = 0.0;
      if (j < i) c = inv;
      else if (j == i) c = -static_cast<double>(i) * inv;
      pts[j][i - 1] = scale * c;
    }
  }
  return pts;
}

InscribedPolytope regular_simplex_polytope(std::size_t k) { return InscribedPolytope::normalized(k, regular_simplex(k)); }

InscribedPolytope orthogonal_simplex_product(const SimplexFactorSpec& spec) {
  const std::size_t d = spec.total();
  std::vector<Vec> verts;
  std::size_t offset = 0;
  for (auto k : spec.dims()) {
    for (const auto& v : regular_simplex(k)) {
      Vec p(d, 0.0);
      for (std::size_t c = 0; c < k; ++c) p[offset + c] = v[c];
      verts.push_back(std::move(p));
    }
    offset += k;
  }
  return InscribedPolytope::normalized(d, std::move(verts));
}

SimplexFactorSpec balanced_split2(std::size_t d) {
  if (d < 2) throw PreconditionError("d+2 construction needs d >= 2");
  return SimplexFactorSpec({d / 2, d - d / 2});
}

SimplexFactorSpec balanced_split3(std::size_t d) {
  if (d < 3) throw PreconditionError("d+3 construction needs d >= 3");
  const std::size_t q = d / 3;
  const std::size_t r = d % 3;
  std::vector<std::size_t> dims(3, q);
  for (std::size_t i = 0; i < r; ++i) dims[2 - i] += 1;
  return SimplexFactorSpec(dims);
}

InscribedPolytope optimal_dplus2(std::size_t d) { return orthogonal_simplex_product(balanced_split2(d)); }

InscribedPolytope optimal_dplus3(std::size_t d) { return orthogonal_simplex_product(balanced_split3(d)); }

InscribedPolytope cyclic_trig(std::size_t d, std::size_t n) {
  if (d == 0 || d % 2 != 0) throw UnsupportedError("cyclic_trig needs an even dimension, got " + std::to_string(d));
  if (n < d + 3) throw PreconditionError("cyclic_trig needs n >= d+3");
  const double scale = std::sqrt(2.0 / static_cast<double>(d));
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    Vec p(d);
    for (std::size_t h = 1; h <= d / 2; ++h) {
      p[2 * (h - 1)] = scale * std::cos(static_cast<double>(h) * t);
      p[2 * (h - 1) + 1] = scale * std::sin(static_cast<double>(h) * t);
    }
    verts.push_back(std::move(p));
  }
  return InscribedPolytope::normalized(d, std::move(verts));
}

InscribedPolytope regular_polygon(std::size_t n) {
  if (n < 3) throw PreconditionError("a polygon needs at least 3 vertices");
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    verts.push_back({std::cos(t), std::sin(t)});
  }
  return InscribedPolytope::normalized(2, std::move(verts));
}

InscribedPolytope bipyramid(const InscribedPolytope& base) {
  const std::size_t d = base.dim() + 1;
  if (!origin_interior(enumerate_facets(base))) throw PreconditionError("bipyramid base must contain the origin");
  std::vector<Vec> verts;
  for (const auto& v : base.vertices()) {
    Vec p = v;
    p.push_back(0.0);
    verts.push_back(std::move(p));
  }
  Vec top(d, 0.0);
  top[d - 1] = 1.0;
  Vec bottom(d, 0.0);
  bottom[d - 1] = -1.0;
  verts.push_back(std::move(top));
  verts.push_back(std::move(bottom));
  return InscribedPolytope(d, std::move(verts));
}

InscribedPolytope cross_polytope(std::size_t d) {
  if (d == 0) throw PreconditionError("cross-polytope needs d >= 1");
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < d; ++i) {
    Vec p(d, 0.0);
    p[i] = 1.0;
    verts.push_back(p);
    p[i] = -1.0;
    verts.push_back(std::move(p));
  }
  return InscribedPolytope(d, std::move(verts));
}

InscribedPolytope p4() { return orthogonal_simplex_product(SimplexFactorSpec({1, 1, 2})); }

InscribedPolytope p6() { return orthogonal_simplex_product(SimplexFactorSpec({2, 2, 2})); }

InscribedPolytope remark54_3polytope() {
  constexpr double a = 2.0 / 3.0;
  constexpr double b = 1.0 / 3.0;
  return InscribedPolytope(3, {{1, 0, 0}, {-a, -a, b}, {0, 1, 0}, {b, -a, -a}, {0, 0, 1}, {-a, b, -a}});
}

}  // namespace spherevol
