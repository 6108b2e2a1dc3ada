#include "spherevol/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "spherevol/errors.hpp"

namespace spherevol {

namespace {

Matrix homogenized(const std::vector<Vec>& points, std::size_t dim) {
  Matrix m(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t r = 0; r < dim; ++r) m(r, j) = points[j][r];
    m(dim, j) = 1.0;
  }
  return m;
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> lexicographic_rank(const std::vector<Vec>& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  std::vector<std::size_t> rank(pts.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

// Pulling triangulation of a full-dimensional convex point set in R^k whose
// points are all vertices. Returns (k+1)-tuples of labels.
std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<Vec>& local,
                                                            const std::vector<std::size_t>& labels,
                                                            const std::vector<std::size_t>& rank) {
  const std::size_t k = local.front().size();
  if (local.size() == k + 1 || k == 0) return {labels};

  std::size_t apex = 0;
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (rank[labels[i]] < rank[labels[apex]]) apex = i;

  std::vector<std::vector<std::size_t>> out;
  for (const auto& ridge : hull_facets(local)) {
    if (std::binary_search(ridge.vertex_indices.begin(), ridge.vertex_indices.end(), apex)) continue;
    // Orthonormal frame of the ridge hyperplane inside R^k.
    Matrix nrow(1, k);
    for (std::size_t c = 0; c < k; ++c) nrow(0, c) = ridge.outward_normal[c];
    const Matrix frame = kernel_basis(nrow);
    const Vec& origin = local[ridge.vertex_indices.front()];
    std::vector<Vec> sub;
    std::vector<std::size_t> sub_labels;
    for (auto vi : ridge.vertex_indices) {
      const Vec rel = subtract(local[vi], origin);
      Vec coords(frame.cols());
      for (std::size_t c = 0; c < frame.cols(); ++c) coords[c] = dot(rel, frame.col(c));
      sub.push_back(std::move(coords));
      sub_labels.push_back(labels[vi]);
    }
    for (auto& s : pulling_triangulation(sub, sub_labels, rank)) {
      s.insert(s.begin(), labels[apex]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Vec centroid(const std::vector<Vec>& pts) {
  Vec c(pts.front().size(), 0.0);
  for (const auto& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (double& x : c) x /= static_cast<double>(pts.size());
  return c;
}

double cone_determinant(const InscribedPolytope& p, const std::vector<std::size_t>& s, const Vec* apex) {
  const std::size_t d = p.dim();
  Matrix m(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) m(r, c) = p.vertex(s[c])[r] - (apex ? (*apex)[r] : 0.0);
  return determinant(m);
}

}  // namespace

InscribedPolytope::InscribedPolytope(std::size_t dim, std::vector<Vec> vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
  if (dim_ == 0) throw DimensionError("dimension must be positive");
  if (vertices_.size() < dim_ + 1)
    throw DimensionError("need at least d+1 = " + std::to_string(dim_ + 1) + " vertices, got " +
                         std::to_string(vertices_.size()));
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.size() != dim_)
      throw DimensionError("vertex " + std::to_string(i) + " has " + std::to_string(v.size()) +
                           " coordinates, expected " + std::to_string(dim_));
    for (double x : v)
      if (!std::isfinite(x)) throw PreconditionError("vertex " + std::to_string(i) + " has a non-finite coordinate");
    if (std::abs(norm(v) - 1.0) > kOnSphereTol)
      throw PreconditionError("vertex " + std::to_string(i) + " is not on the unit sphere (|p| = " +
                              std::to_string(norm(v)) + ")");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (distance(vertices_[i], vertices_[j]) <= 1e-9)
        throw PreconditionError("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  if (rank(homogenized(vertices_, dim_)) != dim_ + 1)
    throw DimensionError("vertices do not affinely span R^" + std::to_string(dim_));
}

InscribedPolytope InscribedPolytope::normalized(std::size_t dim, std::vector<Vec> vertices) {
  for (auto& v : vertices) {
    const double n = norm(v);
    if (n == 0.0 || !std::isfinite(n)) throw PreconditionError("cannot normalize a zero or non-finite vertex");
    for (double& x : v) x /= n;
  }
  return InscribedPolytope(dim, std::move(vertices));
}

std::vector<Facet> hull_facets(const std::vector<Vec>& points, double tol) {
  if (points.empty()) return {};
  const std::size_t k = points.front().size();
  const std::size_t n = points.size();
  if (rank(homogenized(points, k)) != k + 1) throw DimensionError("point set is not full-dimensional");

  std::set<std::vector<std::size_t>> seen;
  std::vector<Facet> out;
  Matrix sys(k, k + 1);
  Vec resid(n);
  for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
    for (const auto& f : out)
      if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(), idx.begin(), idx.end())) return;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) sys(r, c) = points[idx[r]][c];
      sys(r, k) = 1.0;
    }
    const Matrix ker = kernel_basis(sys);
    if (ker.cols() != 1) return;
    Vec normal(k);
    for (std::size_t c = 0; c < k; ++c) normal[c] = ker(c, 0);
    const double nn = norm(normal);
    if (nn < 1e-12) return;
    for (double& x : normal) x /= nn;
    double offset = -ker(k, 0) / nn;

    int side = 0;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j) {
      resid[j] = dot(normal, points[j]) - offset;
      if (std::abs(resid[j]) <= tol) {
        members.push_back(j);
        continue;
      }
      const int s = resid[j] > 0 ? 1 : -1;
      if (side == 0) side = s;
      else if (s != side) return;
    }
    if (side == 0) return;  // every point on the plane; impossible for full-dimensional input
    if (!seen.insert(members).second) return;
    if (side > 0) {
      for (double& x : normal) x = -x;
      offset = -offset;
    }
    out.push_back(Facet{std::move(members), std::move(normal), offset});
  });
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.vertex_indices < b.vertex_indices; });
  return out;
}

std::vector<Facet> enumerate_facets(const InscribedPolytope& p) { return hull_facets(p.vertices()); }

FacetComplex triangulate_boundary(const InscribedPolytope& p, const std::optional<std::vector<std::size_t>>& pull_rank) {
  const std::size_t d = p.dim();
  FacetComplex cx;
  cx.dim = d;
  cx.vertex_count = p.size();
  cx.facets = enumerate_facets(p);
  const std::vector<std::size_t> rank = pull_rank ? *pull_rank : lexicographic_rank(p.vertices());
  if (rank.size() != p.size()) throw PreconditionError("pull rank must list every vertex");
  const Vec inside = centroid(p.vertices());

  for (std::size_t fi = 0; fi < cx.facets.size(); ++fi) {
    const auto& f = cx.facets[fi];
    std::vector<std::vector<std::size_t>> pieces;
    if (f.vertex_indices.size() == d) {
      pieces.push_back(f.vertex_indices);
    } else {
      Matrix nrow(1, d);
      for (std::size_t c = 0; c < d; ++c) nrow(0, c) = f.outward_normal[c];
      const Matrix frame = kernel_basis(nrow);
      const Vec& origin = p.vertex(f.vertex_indices.front());
      std::vector<Vec> local;
      for (auto vi : f.vertex_indices) {
        const Vec rel = subtract(p.vertex(vi), origin);
        Vec coords(frame.cols());
        for (std::size_t c = 0; c < frame.cols(); ++c) coords[c] = dot(rel, frame.col(c));
        local.push_back(std::move(coords));
      }
      pieces = pulling_triangulation(local, f.vertex_indices, rank);
    }
    for (auto& s : pieces) {
      if (cone_determinant(p, s, &inside) < 0) std::swap(s[0], s[1]);
      cx.simplices.push_back(std::move(s));
      cx.facet_of.push_back(fi);
    }
  }
  return cx;
}

bool origin_interior(const std::vector<Facet>& facets, double margin) {
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.offset > margin; });
}

double volume(const InscribedPolytope& p, const FacetComplex& c) {
  if (!origin_interior(c.facets))
    throw UnsupportedError("origin is not strictly interior; facial-simplex volume undefined");
  double v = 0.0;
  for (const auto& s : c.simplices) v += cone_determinant(p, s, nullptr);
  return v / static_cast<double>(factorial(p.dim()));
}

double volume(const InscribedPolytope& p) { return volume(p, triangulate_boundary(p)); }

double hull_volume(const InscribedPolytope& p, const FacetComplex& c) {
  const Vec inside = centroid(p.vertices());
  double v = 0.0;
  for (const auto& s : c.simplices) v += cone_determinant(p, s, &inside);
  return v / static_cast<double>(factorial(p.dim()));
}

double hull_volume(const InscribedPolytope& p) { return hull_volume(p, triangulate_boundary(p)); }

bool is_simplicial(const std::vector<Facet>& facets, std::size_t dim) {
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.vertex_indices.size() == dim; });
}

bool is_simplicial(const InscribedPolytope& p) { return is_simplicial(enumerate_facets(p), p.dim()); }

bool EdgeGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& nb = neighbors.at(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::size_t EdgeGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& nb : neighbors) s += nb.size();
  return s / 2;
}

EdgeGraph edge_graph(const std::vector<Facet>& facets, std::size_t vertex_count) {
  EdgeGraph g;
  g.neighbors.resize(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) {
    for (std::size_t j = i + 1; j < vertex_count; ++j) {
      // {i, j} is an edge iff the intersection of all facets through both is exactly {i, j}.
      std::optional<std::vector<std::size_t>> meet;
      for (const auto& f : facets) {
        const auto& v = f.vertex_indices;
        if (!std::binary_search(v.begin(), v.end(), i) || !std::binary_search(v.begin(), v.end(), j)) continue;
        if (!meet) {
          meet = v;
        } else {
          std::vector<std::size_t> tmp;
          std::set_intersection(meet->begin(), meet->end(), v.begin(), v.end(), std::back_inserter(tmp));
          meet = std::move(tmp);
        }
      }
      if (meet && meet->size() == 2) {
        g.neighbors[i].push_back(j);
        g.neighbors[j].push_back(i);
      }
    }
  }
  for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
  return g;
}

EdgeGraph edge_graph(const InscribedPolytope& p) { return edge_graph(enumerate_facets(p), p.size()); }

std::vector<std::size_t> identity_ordering(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

std::vector<ShiftDistances> distance_profile(const InscribedPolytope& p, const std::vector<std::size_t>& ordering) {
  const std::size_t n = p.size();
  std::vector<std::size_t> check = ordering;
  std::sort(check.begin(), check.end());
  if (check != identity_ordering(n)) throw PreconditionError("ordering must be a permutation of all vertices");

  std::vector<ShiftDistances> out;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    ShiftDistances s;
    s.shift = k;
    for (std::size_t i = 0; i < n; ++i) s.distances.push_back(distance(p.vertex(ordering[(i + k) % n]), p.vertex(ordering[i])));
    const auto [lo, hi] = std::minmax_element(s.distances.begin(), s.distances.end());
    s.spread = *hi - *lo;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace spherevol
