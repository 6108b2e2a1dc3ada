#include "spherevol/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spherevol/errors.hpp"

namespace spherevol {

VertexForce vertex_force(const InscribedPolytope& p, const FacetComplex& c, std::size_t i) {
  if (i >= p.size()) throw PreconditionError("vertex index out of range");
  const std::size_t d = p.dim();
  const Vec& pi = p.vertex(i);
  const double inv_fact = 1.0 / static_cast<double>(factorial(d - 1));

  VertexForce vf;
  vf.vertex = i;
  vf.force.assign(d, 0.0);
  for (std::size_t s = 0; s < c.simplices.size(); ++s) {
    const auto& simplex = c.simplices[s];
    if (std::find(simplex.begin(), simplex.end(), i) == simplex.end()) continue;
    std::vector<Vec> others;
    for (auto v : simplex)
      if (v != i) others.push_back(p.vertex(v));

    const double weight = std::sqrt(std::max(0.0, gram_determinant(others))) * inv_fact;
    Vec normal = generalized_cross(others);
    const double nn = norm(normal);
    const double reach = nn > 0.0 ? dot(normal, pi) / nn : 0.0;
    if (nn == 0.0 || std::abs(reach) <= 1e-12) {
      ++vf.degenerate;
      continue;
    }
    for (double& x : normal) x /= (reach > 0 ? nn : -nn);
    for (std::size_t k = 0; k < d; ++k) vf.force[k] += weight * normal[k];
    vf.simplices.push_back(s);
    vf.weights.push_back(weight);
    vf.normals.push_back(std::move(normal));
  }
  const double mn = norm(vf.force);
  vf.residual = mn > 0.0 ? distance(scaled(vf.force, 1.0 / mn), pi) : 2.0;
  return vf;
}

StationarityReport check_property_z(const InscribedPolytope& p, const FacetComplex& c, double tol) {
  if (!origin_interior(c.facets)) throw UnsupportedError("origin is not strictly interior");
  StationarityReport r;
  r.tol = tol;
  for (std::size_t i = 0; i < p.size(); ++i) {
    r.vertices.push_back(vertex_force(p, c, i));
    r.max_residual = std::max(r.max_residual, r.vertices.back().residual);
  }
  r.satisfies = r.max_residual <= tol;
  return r;
}

StationarityReport check_property_z(const InscribedPolytope& p, double tol) {
  return check_property_z(p, triangulate_boundary(p), tol);
}

double facet_normal_balance(const std::vector<Vec>& simplex) {
  const std::size_t s = simplex.size() - 1;
  if (simplex.size() < 2) throw DimensionError("a simplex needs at least two points");
  for (const auto& v : simplex)
    if (v.size() != s) throw DimensionError("simplex in R^s needs s+1 points");
  {
    std::vector<Vec> edges;
    for (std::size_t k = 1; k <= s; ++k) edges.push_back(subtract(simplex[k], simplex[0]));
    if (std::abs(determinant(Matrix::from_columns(edges))) <= 1e-14)
      throw PreconditionError("degenerate simplex");
  }
  const double inv_fact = s >= 1 ? 1.0 / static_cast<double>(factorial(s - 1)) : 1.0;
  Vec total(s, 0.0);
  for (std::size_t omit = 0; omit <= s; ++omit) {
    std::vector<std::size_t> face;
    for (std::size_t k = 0; k <= s; ++k)
      if (k != omit) face.push_back(k);
    std::vector<Vec> spans;
    for (std::size_t k = 1; k < face.size(); ++k) spans.push_back(subtract(simplex[face[k]], simplex[face[0]]));
    const double area = std::sqrt(std::max(0.0, gram_determinant(spans))) * inv_fact;
    Vec normal = spans.empty() ? Vec{1.0} : generalized_cross(spans);
    const double nn = norm(normal);
    // Outward: away from the omitted vertex.
    const double side = dot(normal, subtract(simplex[omit], simplex[face[0]]));
    for (std::size_t k = 0; k < s; ++k) total[k] += area * normal[k] / (side > 0 ? -nn : nn);
  }
  return norm(total);
}

EdgeComparison equal_edge_check(const InscribedPolytope& p, std::size_t i, std::size_t j1, std::size_t j2) {
  const auto g = edge_graph(p);
  if (i >= p.size() || j1 >= p.size() || j2 >= p.size()) throw PreconditionError("vertex index out of range");
  if (!g.adjacent(i, j1) || !g.adjacent(i, j2))
    throw PreconditionError("vertices " + std::to_string(j1) + " and " + std::to_string(j2) + " must both be adjacent to " +
                            std::to_string(i));
  EdgeComparison e;
  e.inner_product_gap = std::abs(dot(p.vertex(i), p.vertex(j1)) - dot(p.vertex(i), p.vertex(j2)));
  e.length_gap = std::abs(distance(p.vertex(i), p.vertex(j1)) - distance(p.vertex(i), p.vertex(j2)));
  e.equal = e.length_gap <= 1e-9;
  return e;
}

}  // namespace spherevol
