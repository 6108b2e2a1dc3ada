#include "spherevol/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <numeric>

#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"

namespace spherevol {

namespace {

constexpr double kIdentifyTol = 1e-8;

std::vector<Vec> points_of(const Matrix& cols) { return cols.columns(); }

bool gram_equal_up_to_relabeling(const Matrix& g, const Matrix& ref) {
  const std::size_t n = g.rows();
  if (ref.rows() != n) return false;
  for (std::size_t s = 1; s < n || (n == 1 && s == 1); ++s) {
    if (std::gcd(s, n) != 1) continue;
    for (std::size_t t = 0; t < n; ++t) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
          ok = std::abs(g(i, j) - ref((s * i + t) % n, (s * j + t) % n)) <= kIdentifyTol;
      if (ok) return true;
    }
    if (n == 1) break;
  }
  return false;
}

// Connected components of the "not orthogonal" relation; each must be a
// regular simplex, and the simplex dimensions must add up to the rank.
std::optional<std::vector<std::size_t>> simplex_factors(const Matrix& g, std::size_t rank) {
  const std::size_t n = g.rows();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::size_t> dims;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    std::vector<std::size_t> members{start};
    comp[start] = start;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] == n && std::abs(g(members[k], j)) > kIdentifyTol) {
          comp[j] = start;
          members.push_back(j);
        }
    if (members.size() < 2) return std::nullopt;
    const double expect = -1.0 / static_cast<double>(members.size() - 1);
    for (auto a : members)
      for (auto b : members)
        if (a != b && std::abs(g(a, b) - expect) > kIdentifyTol) return std::nullopt;
    dims.push_back(members.size() - 1);
  }
  if (std::accumulate(dims.begin(), dims.end(), std::size_t{0}) != rank) return std::nullopt;
  std::sort(dims.begin(), dims.end());
  return dims;
}

double max_abs_entry(const Matrix& m) { return m.max_abs(); }

bool has_coinciding_points(const Matrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, i) + g(j, j) - 2.0 * g(i, j) <= 1e-14) return true;
  return false;
}

// Max over shifts of the spread of |p_{o(i+k)} - p_{o(i)}|, from the Gram matrix.
double profile_spread(const Matrix& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.rows();
  double worst = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = order[i];
      const std::size_t b = order[(i + k) % n];
      const double dist = std::sqrt(std::max(0.0, g(a, a) + g(b, b) - 2.0 * g(a, b)));
      lo = std::min(lo, dist);
      hi = std::max(hi, dist);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

}  // namespace

Matrix gram_matrix(const std::vector<Vec>& points) {
  const std::size_t n = points.size();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = dot(points[i], points[j]);
  return g;
}

Matrix symmetric_circulant(std::size_t n, const Vec& params) {
  if (n == 0 || params.size() != n / 2) throw DimensionError("symmetric circulant of order n needs n/2 parameters");
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (j + n - i) % n;
      const std::size_t m = std::min(k, n - k);
      g(i, j) = m == 0 ? 1.0 : params[m - 1];
    }
  return g;
}

GramSystem make_gram_system(Matrix gram, Vec lambdas, std::optional<Vec> params) {
  const std::size_t n = gram.rows();
  if (!gram.square()) throw DimensionError("Gram matrix must be square");
  if (lambdas.size() != n) throw DimensionError("need one lambda per point");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(gram(i, i) - 1.0) > 1e-9) throw PreconditionError("Gram matrix must have unit diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(gram(i, j) - gram(j, i)) > 1e-12) throw PreconditionError("Gram matrix must be symmetric");
      if (std::abs(gram(i, j)) > 1.0 + 1e-9) throw PreconditionError("Gram entries must lie in [-1, 1]");
    }
  }
  for (double l : lambdas)
    if (!(l >= 0.0)) throw PreconditionError("lambdas must be nonnegative");
  if (params) {
    const Matrix c = symmetric_circulant(n, *params);
    if ((c - gram).max_abs() > 1e-12) throw PreconditionError("Gram matrix does not match its circulant parameters");
  }
  return GramSystem{std::move(gram), std::move(lambdas), std::move(params)};
}

LoewnerResiduals loewner_check(const std::vector<Vec>& points, const Vec& lambdas) {
  if (points.empty() || points.size() != lambdas.size()) throw DimensionError("need one lambda per point");
  const std::size_t d = points.front().size();
  for (const auto& u : points) {
    if (u.size() != d) throw DimensionError("points must share a dimension");
    if (std::abs(norm(u) - 1.0) > 1e-9) throw PreconditionError("contact points must be unit vectors");
  }
  for (double l : lambdas)
    if (!(l >= 0.0)) throw PreconditionError("lambdas must be nonnegative");

  Vec center(d, 0.0);
  Matrix tensor(d, d);
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t a = 0; a < d; ++a) {
      center[a] += lambdas[k] * points[k][a];
      for (std::size_t b = 0; b < d; ++b) tensor(a, b) += lambdas[k] * points[k][a] * points[k][b];
    }
  }
  LoewnerResiduals r;
  for (double x : center) r.vector_residual = std::max(r.vector_residual, std::abs(x));
  r.tensor_residual = (tensor - Matrix::identity(d)).max_abs();
  return r;
}

GramResiduals gram_check(const GramSystem& g) {
  const std::size_t n = g.size();
  const Vec gl = g.gram * std::span<const double>(g.lambdas);
  Matrix glg(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += g.gram(i, k) * g.lambdas[k] * g.gram(k, j);
      glg(i, j) = s;
    }
  GramResiduals r;
  for (double x : gl) r.vector_residual = std::max(r.vector_residual, std::abs(x));
  r.product_residual = max_abs_entry(glg - g.gram);
  return r;
}

Identification identify_realization(const std::vector<Vec>& points) {
  const std::size_t n = points.size();
  if (n == 0) return {ShapeKind::unknown, "unknown"};
  const Matrix g = gram_matrix(points);
  const std::size_t r = points.front().size();
  if (has_coinciding_points(g)) return {ShapeKind::unknown, "unknown"};

  if (r + 1 == n) {
    const double expect = -1.0 / static_cast<double>(r);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = std::abs(g(i, j) - (i == j ? 1.0 : expect)) <= kIdentifyTol;
    if (ok) return {ShapeKind::regular_simplex, "regular simplex in R^" + std::to_string(r)};
  }
  const std::string nn = std::to_string(n);
  if (r == 2 && n >= 3 && gram_equal_up_to_relabeling(g, gram_matrix(regular_polygon(n).vertices())))
    return {ShapeKind::regular_polygon, "C_2(" + nn + ")"};
  if (r == 4 && n >= 7 && gram_equal_up_to_relabeling(g, gram_matrix(cyclic_trig(4, n).vertices())))
    return {ShapeKind::cyclic4, "C_4(" + nn + ")"};
  if (r == 6 && n >= 9 && gram_equal_up_to_relabeling(g, gram_matrix(cyclic_trig(6, n).vertices())))
    return {ShapeKind::cyclic6, "C_6(" + nn + ")"};
  if (auto dims = simplex_factors(g, r); dims && dims->size() >= 2) {
    std::string label = "orthogonal simplex product (";
    for (std::size_t k = 0; k < dims->size(); ++k) label += (k ? "," : "") + std::to_string((*dims)[k]);
    return {ShapeKind::simplex_product, label + ")"};
  }
  return {ShapeKind::unknown, "unknown"};
}

Identification identify_realization(const Matrix& points) { return identify_realization(points_of(points)); }

std::vector<CirculantSolution> solve_symmetric_circulant(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("symmetric circulant solver needs odd n >= 3");
  const std::size_t h = (n - 1) / 2;
  std::vector<CirculantSolution> out;
  std::vector<Vec> seen;

  for (std::size_t mask = 1; mask < (std::size_t{1} << h); ++mask) {
    std::vector<std::size_t> freq;
    for (std::size_t j = 1; j <= h; ++j)
      if (mask & (std::size_t{1} << (j - 1))) freq.push_back(j);
    const double r = static_cast<double>(freq.size());

    // Inverse transform of mu_j = 1/lambda on +-freq, 0 elsewhere, with
    // lambda = 2r/n fixed by the unit trace.
    Vec params(h, 0.0);
    for (std::size_t k = 1; k <= h; ++k) {
      double s = 0.0;
      for (auto j : freq) s += std::cos(2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
      params[k - 1] = s / r;
    }
    Vec key = params;
    std::sort(key.begin(), key.end());
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const Vec& other) {
      for (std::size_t k = 0; k < h; ++k)
        if (std::abs(other[k] - key[k]) > 1e-9) return false;
      return true;
    });
    if (dup) continue;
    seen.push_back(key);

    CirculantSolution sol;
    sol.n = n;
    sol.params = params;
    sol.frequencies = freq;
    sol.lambda = 2.0 * r / static_cast<double>(n);
    sol.constraint_residual = std::abs(1.0 + 2.0 * std::accumulate(params.begin(), params.end(), 0.0));
    const auto sys = make_gram_system(symmetric_circulant(n, params), Vec(n, sol.lambda), params);
    sol.residuals = gram_check(sys);
    try {
      sol.realization = psd_factor(sys.gram);
      sol.rank = sol.realization.rows();
      if (has_coinciding_points(sys.gram)) {
        sol.reason = "coinciding points";
        sol.identification = {ShapeKind::unknown, "unknown"};
      } else {
        sol.identification = identify_realization(sol.realization);
      }
    } catch (const NotGramMatrixError&) {
      sol.reason = "not realizable";
      sol.identification = {ShapeKind::unknown, "unknown"};
    }
    out.push_back(std::move(sol));
  }
  return out;
}

std::vector<CirculantSolution> solve_symmetric_d4() { return solve_symmetric_circulant(7); }

D6Report verify_symmetric_d6() {
  D6Report rep;
  const std::size_t n = 9;
  struct Named {
    std::string name;
    std::vector<Vec> points;
    std::vector<std::size_t> interleave;
  };
  std::vector<Named> listed{
      {"regular simplex in R^8", regular_simplex(8), {}},
      {"C_2(9)", regular_polygon(9).vertices(), {}},
      {"C_4(9)", cyclic_trig(4, 9).vertices(), {}},
      {"C_6(9)", cyclic_trig(6, 9).vertices(), {}},
      // Triangle j holds vertices 3j..3j+2; visiting one vertex per triangle
      // in turn makes the Gram matrix circulant.
      {"three orthogonal triangles", p6().vertices(), {0, 3, 6, 1, 4, 7, 2, 5, 8}},
  };
  for (const auto& item : listed) {
    ListedSolution s;
    s.name = item.name;
    const Matrix g = gram_matrix(item.points);
    const std::size_t rank_est = psd_factor(g).rows();
    const double lambda = static_cast<double>(rank_est) / static_cast<double>(n);
    s.residuals = gram_check(make_gram_system(g, Vec(n, lambda)));
    const Matrix pts = psd_factor(g);
    s.rank = pts.rows();
    s.identification = identify_realization(pts);
    s.natural_order_spread = profile_spread(g, identity_ordering(n));
    s.best_order_spread = item.interleave.empty() ? s.natural_order_spread : profile_spread(g, item.interleave);
    if (s.rank == 6 && s.identification.kind == ShapeKind::cyclic6) rep.cyclic_in_r6.push_back(s.name);
    rep.listed.push_back(std::move(s));
  }
  rep.enumeration = solve_symmetric_circulant(n);
  return rep;
}

}  // namespace spherevol
