#include "spherevol/gale.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spherevol/errors.hpp"

namespace spherevol {

namespace {

constexpr double kZeroTol = 1e-9;

Vec perp(const Vec& z) { return {-z[1], z[0]}; }

// Points on the closed hyperplane through o with normal u, and the counts in
// the two open half-spaces.
struct SideCount {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

SideCount count_sides(const GaleDiagram& g, const Vec& u) {
  SideCount c;
  for (const auto& z : g.points) {
    const double s = dot(u, z);
    if (s > kZeroTol) ++c.positive;
    else if (s < -kZeroTol) ++c.negative;
  }
  return c;
}

}  // namespace

std::vector<std::vector<std::size_t>> GaleDiagram::coincident_groups() const {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<bool> used(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> g{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!used[j] && distance(points[i], points[j]) <= kCoincidenceTol) {
        g.push_back(j);
        used[j] = true;
      }
    groups.push_back(std::move(g));
  }
  return groups;
}

Matrix vertex_matrix(const InscribedPolytope& p) {
  Matrix m(p.dim() + 1, p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t r = 0; r < p.dim(); ++r) m(r, j) = p.vertex(j)[r];
    m(p.dim(), j) = 1.0;
  }
  return m;
}

GaleDiagram gale_transform(const InscribedPolytope& p) {
  const Matrix m = vertex_matrix(p);
  const Matrix ker = kernel_basis(m);
  const std::size_t expected = p.size() - p.dim() - 1;
  if (ker.cols() != expected) throw DimensionError("vertex matrix is rank deficient");
  GaleDiagram g;
  g.codim = expected;
  for (std::size_t i = 0; i < p.size(); ++i) {
    g.points.push_back(ker.row(i));
    g.labels.push_back(i);
  }
  return g;
}

Matrix transform_matrix(const GaleDiagram& g) {
  std::vector<std::size_t> order(g.labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return g.labels[a] < g.labels[b]; });
  Matrix t(g.points.size(), g.codim);
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < g.codim; ++c) t(r, c) = g.points[order[r]][c];
  return t;
}

bool origin_in_relint(const std::vector<Vec>& points, std::size_t dim) {
  if (points.empty()) return false;
  // Variables (t, nu_1..nu_m) >= 0 with coefficients mu_j = t + nu_j:
  //   t * sum_j z_j + sum_j nu_j z_j = 0,   m t + sum_j nu_j = 1,   maximize t.
  const std::size_t m = points.size();
  Matrix a(dim + 1, m + 1);
  Vec b(dim + 1, 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      a(r, j + 1) = points[j][r];
      s += points[j][r];
    }
    a(r, 0) = s;
  }
  a(dim, 0) = static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) a(dim, j + 1) = 1.0;
  b[dim] = 1.0;
  Vec c(m + 1, 0.0);
  c[0] = 1.0;
  const auto res = maximize_lp(a, b, c);
  return res.status == LpResult::Status::optimal && res.objective >= kRelintMargin;
}

bool is_face(const GaleDiagram& diag, const std::vector<std::size_t>& subset) {
  std::vector<Vec> coface;
  for (std::size_t k = 0; k < diag.points.size(); ++k)
    if (std::find(subset.begin(), subset.end(), diag.labels[k]) == subset.end()) coface.push_back(diag.points[k]);
  if (coface.empty()) throw PreconditionError("is_face needs a proper subset of the vertices");
  return origin_in_relint(coface, diag.codim);
}

DiagramValidity validate_diagram(const GaleDiagram& diag) {
  DiagramValidity v;
  if (diag.codim > 2) throw UnsupportedError("diagram validation supports codimension at most 2");
  if (diag.codim == 0) {
    v.valid = true;
    return v;
  }
  if (diag.codim == 1) {
    const auto c = count_sides(diag, {1.0});
    if (c.positive < 2) v.witness = {1.0};
    else if (c.negative < 2) v.witness = {-1.0};
    v.valid = v.witness.empty();
    return v;
  }
  // codim 2: the minimum open half-plane count is attained with the boundary
  // line through some point, so lines through the points suffice.
  std::vector<Vec> normals;
  for (const auto& z : diag.points)
    if (norm(z) > kZeroTol) normals.push_back(normalized(perp(z)));
  if (normals.empty()) normals.push_back({1.0, 0.0});
  for (const auto& u : normals) {
    const auto c = count_sides(diag, u);
    if (c.positive < 2) {
      v.witness = u;
      return v;
    }
    if (c.negative < 2) {
      v.witness = scaled(u, -1.0);
      return v;
    }
  }
  v.valid = true;
  return v;
}

DiagramPredicates diagram_predicates(const GaleDiagram& diag) {
  if (diag.codim > 2) throw UnsupportedError("diagram predicates support codimension at most 2");
  DiagramPredicates out;
  out.pyramid = diag.codim == 0 ||
                std::any_of(diag.points.begin(), diag.points.end(), [](const Vec& z) { return norm(z) <= kCoincidenceTol; });
  if (diag.codim == 0) {
    out.simplicial = true;
    return out;
  }
  // A point at o lies on every hyperplane and has o in its relative interior.
  if (out.pyramid) return out;
  if (diag.codim == 1) {
    out.simplicial = true;
    return out;
  }
  for (const auto& z : diag.points) {
    const Vec u = normalized(perp(z));
    std::vector<Vec> on_line;
    for (const auto& w : diag.points)
      if (std::abs(dot(u, w)) <= kZeroTol * std::max(1.0, norm(w))) on_line.push_back(w);
    if (origin_in_relint(on_line, 2)) return out;
  }
  out.simplicial = true;
  return out;
}

ContractedDiagram contract_diagram(const GaleDiagram& diag) {
  if (diag.codim == 0 || diag.codim > 2) throw UnsupportedError("contraction supports codimension 1 and 2");
  ContractedDiagram out;
  out.diagram = diag;

  if (diag.codim == 1) {
    std::size_t neg = 0;
    std::size_t pos = 0;
    bool zero = false;
    for (auto& z : out.diagram.points) {
      if (z[0] > kZeroTol) {
        z[0] = 1.0;
        ++pos;
      } else if (z[0] < -kZeroTol) {
        z[0] = -1.0;
        ++neg;
      } else {
        z[0] = 0.0;
        zero = true;
      }
    }
    out.contracted = !zero;
    out.multiplicities = {neg, pos};
    return out;
  }

  const auto preds = diagram_predicates(diag);
  for (auto& z : out.diagram.points)
    if (norm(z) > kCoincidenceTol) z = normalized(z);
  if (preds.pyramid || !preds.simplicial) return out;

  // Rays: groups of points sharing a direction.
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::size_t n = diag.points.size();
  std::vector<double> angle(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = std::atan2(diag.points[k][1], diag.points[k][0]);
    if (a < 0) a += two_pi;
    angle[k] = a;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return angle[a] < angle[b]; });

  struct Ray {
    double angle;
    std::vector<std::size_t> members;
  };
  std::vector<Ray> rays;
  for (auto k : order) {
    if (!rays.empty() && angle[k] - rays.back().angle <= kAngularMergeTol) rays.back().members.push_back(k);
    else rays.push_back({angle[k], {k}});
  }
  if (rays.size() > 1 && rays.front().angle + two_pi - rays.back().angle <= kAngularMergeTol) {
    rays.front().members.insert(rays.front().members.end(), rays.back().members.begin(), rays.back().members.end());
    rays.pop_back();
  }

  // Diameters ordered by angle mod pi; side records which end is occupied.
  struct Diameter {
    double angle;  // in [0, pi)
    bool upper;    // occupied end has angle < pi
    std::vector<std::size_t> members;
  };
  std::vector<Diameter> dia;
  for (auto& r : rays) {
    const bool upper = r.angle < std::numbers::pi;
    dia.push_back({upper ? r.angle : r.angle - std::numbers::pi, upper, std::move(r.members)});
  }
  std::sort(dia.begin(), dia.end(), [](const Diameter& a, const Diameter& b) { return a.angle < b.angle; });

  // Neighbouring diameters whose occupied ends are adjacent on the circle
  // carry the same combinatorics and can be merged. Across the wrap at pi the
  // ends swap, so adjacency there means opposite sides.
  bool changed = true;
  while (changed && dia.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i + 1 < dia.size(); ++i) {
      if (dia[i].upper == dia[i + 1].upper) {
        dia[i].members.insert(dia[i].members.end(), dia[i + 1].members.begin(), dia[i + 1].members.end());
        dia.erase(dia.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
    if (!changed && dia.size() > 1 && dia.back().upper != dia.front().upper) {
      dia.front().members.insert(dia.front().members.end(), dia.back().members.begin(), dia.back().members.end());
      dia.pop_back();
      changed = true;
    }
  }
  const std::size_t m = dia.size();
  if (m < 3 || m % 2 == 0) return out;

  // Equidistant diameters; alternating ends give the vertices of a regular m-gon.
  std::vector<std::pair<double, std::size_t>> vertices;  // (angle, diameter)
  for (std::size_t j = 0; j < m; ++j) {
    double a = std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    if (!dia[j].upper) a += std::numbers::pi;
    for (auto k : dia[j].members) out.diagram.points[k] = {std::cos(a), std::sin(a)};
    vertices.emplace_back(a, dia[j].members.size());
  }
  std::sort(vertices.begin(), vertices.end());
  for (const auto& v : vertices) out.multiplicities.push_back(v.second);
  out.contracted = true;
  return out;
}

}  // namespace spherevol
