#include "spherevol/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"

namespace spherevol {

namespace {

constexpr std::size_t kMaxResamples = 100;

Vec random_unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(d);
  double n = 0.0;
  while (n < 1e-6) {
    for (double& x : v) x = gauss(rng);
    n = norm(v);
  }
  for (double& x : v) x /= n;
  return v;
}

std::optional<InscribedPolytope> try_polytope(std::size_t d, const std::vector<Vec>& pts) {
  try {
    return InscribedPolytope(d, pts);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

// Moves a vertex that lies on no boundary simplex to the sphere point
// farthest outside the facet of conv(others) it sits beneath.
Vec reproject(const std::vector<Vec>& pts, std::size_t i) {
  std::vector<Vec> others;
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (k != i) others.push_back(pts[k]);
  const auto facets = hull_facets(others);
  const Facet* best = nullptr;
  double best_height = -std::numeric_limits<double>::infinity();
  for (const auto& f : facets) {
    const double h = dot(f.outward_normal, pts[i]) - f.offset;
    if (h > best_height) {
      best_height = h;
      best = &f;
    }
  }
  return best ? best->outward_normal : pts[i];
}

}  // namespace

void OptimizerConfig::validate() const {
  if (dim < 1) throw PreconditionError("dimension must be positive");
  if (nverts < dim + 1) throw PreconditionError("need at least d+1 vertices");
  if (starts < 1) throw PreconditionError("need at least one start");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw PreconditionError("alpha must lie in (0, 1]");
  if (!(move_tol > 0.0)) throw PreconditionError("move tolerance must be positive");
}

Vec signed_force(const std::vector<Vec>& vertices, const FacetComplex& c, std::size_t i) {
  const std::size_t d = c.dim;
  const double inv_fact = 1.0 / static_cast<double>(factorial(d - 1));
  Vec m(d, 0.0);
  std::vector<Vec> others;
  for (const auto& s : c.simplices) {
    const auto it = std::find(s.begin(), s.end(), i);
    if (it == s.end()) continue;
    const auto k = static_cast<std::size_t>(it - s.begin());
    others.clear();
    for (auto v : s)
      if (v != i) others.push_back(vertices[v]);
    // det(q_1..q_d) = (-1)^{d-1-k} <q_k, cross(others)>.
    const double sign = ((d - 1 - k) % 2 == 0) ? 1.0 : -1.0;
    const Vec g = generalized_cross(others);
    for (std::size_t r = 0; r < d; ++r) m[r] += sign * g[r] * inv_fact;
  }
  return m;
}

std::vector<Vec> canonical_vertices(const std::vector<Vec>& vertices) {
  const std::size_t d = vertices.front().size();
  Matrix s(d, d);
  for (const auto& p : vertices)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) s(a, b) += p[a] * p[b];
  const auto eig = symmetric_eigen(s);
  std::vector<Vec> out(vertices.size(), Vec(d));
  for (std::size_t ax = 0; ax < d; ++ax) {
    const Vec axis = eig.vectors.col(ax);
    double skew = 0.0;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      out[k][ax] = dot(vertices[k], axis);
      skew += out[k][ax] * out[k][ax] * out[k][ax];
    }
    if (skew < -1e-9)
      for (auto& v : out) v[ax] = -v[ax];
  }
  // Round away sub-tolerance noise so ties compare equal.
  for (auto& v : out)
    for (double& x : v) x = std::round(x * 1e9) / 1e9 + 0.0;
  std::sort(out.begin(), out.end());
  return out;
}

StartTrajectory ascend_from(const OptimizerConfig& config, std::vector<Vec> pts, std::size_t start_index) {
  const std::size_t d = config.dim;
  StartTrajectory tr;
  tr.start = start_index;

  auto poly = try_polytope(d, pts);
  if (!poly) {
    tr.failure = "degenerate start";
    return tr;
  }
  FacetComplex cx = triangulate_boundary(*poly);
  double vol = hull_volume(*poly, cx);
  tr.volumes.push_back(vol);

  for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
    double max_disp = 0.0;
    std::vector<bool> on_boundary(pts.size(), false);
    for (const auto& s : cx.simplices)
      for (auto v : s) on_boundary[v] = true;

    for (std::size_t i = 0; i < pts.size(); ++i) {
      Vec q;
      const Vec m = on_boundary[i] ? signed_force(pts, cx, i) : Vec{};
      const double mn = m.empty() ? 0.0 : norm(m);
      if (mn <= 1e-14) {
        q = reproject(pts, i);
      } else {
        Vec mix(d);
        for (std::size_t r = 0; r < d; ++r) mix[r] = (1.0 - config.alpha) * pts[i][r] + config.alpha * m[r] / mn;
        const double mixn = norm(mix);
        q = mixn > 1e-12 ? scaled(mix, 1.0 / mixn) : scaled(m, 1.0 / mn);
      }
      max_disp = std::max(max_disp, distance(q, pts[i]));
      pts[i] = std::move(q);
    }

    poly = try_polytope(d, pts);
    if (!poly) {
      tr.failure = "hull degenerated at sweep " + std::to_string(iter);
      break;
    }
    cx = triangulate_boundary(*poly);
    vol = hull_volume(*poly, cx);
    tr.iterations = iter;
    if (config.keep_trajectories) tr.volumes.push_back(vol);
    if (max_disp < config.move_tol) {
      tr.converged = true;
      break;
    }
  }
  if (!config.keep_trajectories && tr.volumes.size() == 1 && tr.iterations > 0) tr.volumes.push_back(vol);
  tr.final_volume = vol;
  tr.final_vertices = pts;
  return tr;
}

namespace {

StartTrajectory run_start(const OptimizerConfig& config, std::size_t s) {
  std::mt19937_64 rng(config.seed + s);
  std::vector<Vec> pts;
  std::size_t resamples = 0;
  while (true) {
    pts.clear();
    for (std::size_t i = 0; i < config.nverts; ++i) pts.push_back(random_unit(rng, config.dim));
    if (try_polytope(config.dim, pts)) break;
    if (++resamples >= kMaxResamples) throw NumericError("could not draw a full-dimensional start after 100 resamples");
  }
  auto tr = ascend_from(config, std::move(pts), s);
  tr.resamples = resamples;
  return tr;
}

}  // namespace

OptimizerResult ascend(const OptimizerConfig& config) {
  config.validate();
  std::vector<StartTrajectory> runs(config.starts);
  std::vector<std::exception_ptr> errors(config.starts);

  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.starts));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s = next++; s < config.starts; s = next++) {
      try {
        runs[s] = run_start(config, s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  double top = -1.0;
  for (const auto& r : runs)
    if (r.failure.empty()) top = std::max(top, r.final_volume);
  if (top <= 0.0) throw NumericError("every start degenerated");

  std::optional<std::size_t> pick;
  std::vector<Vec> pick_canon;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    const auto& r = runs[s];
    if (!r.failure.empty() || r.final_volume < top - 1e-9) continue;
    auto canon = canonical_vertices(r.final_vertices);
    if (!pick || canon < pick_canon) {
      pick = s;
      pick_canon = std::move(canon);
    }
  }

  InscribedPolytope best(config.dim, runs[*pick].final_vertices);
  OptimizerResult res{best, runs[*pick].final_volume, *pick, std::move(runs), std::nullopt};
  const auto cx = triangulate_boundary(res.best);
  if (origin_interior(cx.facets)) res.stationarity = check_property_z(res.best, cx);
  return res;
}

Certificate certify(const InscribedPolytope& p, std::size_t samples, double radius, std::uint64_t seed, double tol) {
  Certificate c;
  const auto report = check_property_z(p, tol);
  c.residual = report.max_residual;
  c.stationary = report.satisfies;
  c.samples = samples;
  c.radius = radius;
  c.worst_violation = -std::numeric_limits<double>::infinity();

  const double base = hull_volume(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t i = pick(rng);
    const Vec& pi = p.vertex(i);
    Vec t = random_unit(rng, p.dim());
    const double along = dot(t, pi);
    for (std::size_t r = 0; r < t.size(); ++r) t[r] -= along * pi[r];
    const double tn = norm(t);
    if (tn < 1e-9) continue;
    const double theta = radius * (1.0 - unit(rng));  // (0, radius]
    auto verts = p.vertices();
    for (std::size_t r = 0; r < t.size(); ++r) verts[i][r] = std::cos(theta) * pi[r] + std::sin(theta) * t[r] / tn;
    auto moved = try_polytope(p.dim(), verts);
    if (!moved) continue;
    ++c.evaluated;
    c.worst_violation = std::max(c.worst_violation, hull_volume(*moved) - base);
  }
  c.violated = c.worst_violation > 1e-12;
  return c;
}

EvenDComparison compare_even_d(std::size_t d, OptimizerConfig config) {
  if (d % 2 != 0 || d < 4 || d > 8) throw PreconditionError("compare_even_d needs d in {4, 6, 8}");
  EvenDComparison out;
  out.d = d;
  out.n = d + 3;
  out.cyclic_volume = volume(cyclic_trig(d, d + 3));
  out.product_volume = volume(optimal_dplus3(d));
  config.dim = d;
  config.nverts = d + 3;
  out.optimizer_volume = ascend(config).best_volume;
  out.product_beats_cyclic = out.product_volume > out.cyclic_volume;
  out.experimental = d == 8;
  out.ordered = {{"cyclic", out.cyclic_volume}, {"dplus3", out.product_volume}, {"optimizer", out.optimizer_volume}};
  std::stable_sort(out.ordered.begin(), out.ordered.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

}  // namespace spherevol
