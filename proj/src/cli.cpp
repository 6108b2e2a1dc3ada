#include "spherevol/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spherevol/bounds.hpp"
#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"
#include "spherevol/gale.hpp"
#include "spherevol/gram.hpp"
#include "spherevol/optimizer.hpp"
#include "spherevol/stationarity.hpp"

namespace spherevol {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InscribedPolytope load_polytope(const std::string& path) {
  try {
    return polytope_from_json_text(read_file(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

json vec_json(const Vec& v) { return json(v); }

json points_json(const std::vector<Vec>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(vec_json(p));
  return a;
}

json report_json(const StationarityReport& r) {
  json vs = json::array();
  for (const auto& v : r.vertices)
    vs.push_back({{"vertex", v.vertex},
                  {"residual", v.residual},
                  {"force", v.force},
                  {"simplices", v.simplices.size()},
                  {"degenerate", v.degenerate}});
  return {{"satisfies", r.satisfies}, {"max_residual", r.max_residual}, {"tol", r.tol}, {"test", r.test}, {"vertices", vs}};
}

json diagram_json(const GaleDiagram& g) {
  return {{"codim", g.codim}, {"points", points_json(g.points)}, {"labels", g.labels}};
}

std::string kind_name(ShapeKind k) {
  switch (k) {
    case ShapeKind::regular_simplex: return "regular_simplex";
    case ShapeKind::regular_polygon: return "regular_polygon";
    case ShapeKind::cyclic4: return "cyclic4";
    case ShapeKind::cyclic6: return "cyclic6";
    case ShapeKind::simplex_product: return "simplex_product";
    case ShapeKind::unknown: break;
  }
  return "unknown";
}

json identification_json(const Identification& id) { return {{"kind", kind_name(id.kind)}, {"label", id.label}}; }

json residuals_json(const GramResiduals& r) {
  return {{"vector_residual", r.vector_residual}, {"product_residual", r.product_residual}};
}

json circulant_json(const CirculantSolution& s) {
  return {{"params", s.params},
          {"frequencies", s.frequencies},
          {"lambda", s.lambda},
          {"constraint_residual", s.constraint_residual},
          {"residuals", residuals_json(s.residuals)},
          {"rank", s.rank},
          {"identification", identification_json(s.identification)},
          {"reason", s.reason}};
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SPHEREVOL_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("SPHEREVOL_SEED is not an unsigned integer: '") + env + "'");
  }
  return 0;
}

InscribedPolytope construct(const std::string& family, std::size_t dim, std::size_t nverts,
                            const std::vector<std::size_t>& dims, const std::string& base) {
  auto need_dim = [&] {
    if (dim == 0) throw ValidationError("--dim is required for family '" + family + "'");
  };
  if (family == "simplex") return need_dim(), regular_simplex_polytope(dim);
  if (family == "product") {
    if (dims.empty()) throw ValidationError("--dims is required for family 'product'");
    return orthogonal_simplex_product(SimplexFactorSpec(dims));
  }
  if (family == "dplus2") return need_dim(), optimal_dplus2(dim);
  if (family == "dplus3") return need_dim(), optimal_dplus3(dim);
  if (family == "cyclic") {
    need_dim();
    if (nverts == 0) throw ValidationError("--nverts is required for family 'cyclic'");
    return cyclic_trig(dim, nverts);
  }
  if (family == "cross") return need_dim(), cross_polytope(dim);
  if (family == "polygon") {
    if (nverts == 0) throw ValidationError("--nverts is required for family 'polygon'");
    return regular_polygon(nverts);
  }
  if (family == "bipyramid") {
    if (!base.empty()) return bipyramid(load_polytope(base));
    if (nverts == 0) throw ValidationError("bipyramid needs --base FILE or --nverts for a polygon base");
    return bipyramid(regular_polygon(nverts));
  }
  if (family == "p4") return p4();
  if (family == "p6") return p6();
  if (family == "remark54") return remark54_3polytope();
  throw ValidationError("unknown family '" + family + "'");
}

json start_json(const StartTrajectory& t, bool with_volumes) {
  json j = {{"start", t.start},
            {"final_volume", t.final_volume},
            {"iterations", t.iterations},
            {"converged", t.converged},
            {"resamples", t.resamples},
            {"failure", t.failure}};
  if (with_volumes) j["volumes"] = t.volumes;
  return j;
}

}  // namespace

std::string polytope_to_json(const InscribedPolytope& p) {
  return json{{"dim", p.dim()}, {"vertices", points_json(p.vertices())}}.dump();
}

InscribedPolytope polytope_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("top level must be an object with fields 'dim' and 'vertices'");
  if (!doc.contains("dim")) throw ValidationError("missing field 'dim'");
  if (!doc.contains("vertices")) throw ValidationError("missing field 'vertices'");
  const auto& d = doc["dim"];
  if (!d.is_number_integer() || d.get<long long>() < 1) throw ValidationError("field 'dim' must be a positive integer");
  const auto& vs = doc["vertices"];
  if (!vs.is_array()) throw ValidationError("field 'vertices' must be an array");
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_array()) throw ValidationError("field 'vertices[" + std::to_string(i) + "]' must be an array");
    Vec v;
    for (std::size_t k = 0; k < vs[i].size(); ++k) {
      if (!vs[i][k].is_number())
        throw ValidationError("field 'vertices[" + std::to_string(i) + "][" + std::to_string(k) + "]' must be a number");
      v.push_back(vs[i][k].get<double>());
    }
    verts.push_back(std::move(v));
  }
  return InscribedPolytope(d.get<std::size_t>(), std::move(verts));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inscribed polytopes of maximal volume: constructions, checks and search", "spherevol"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of standard output");

  // construct
  std::string family;
  std::size_t c_dim = 0, c_nverts = 0;
  std::vector<std::size_t> c_dims;
  std::string c_base;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a named construction as a polytope document");
  construct_cmd->add_option("family", family, "simplex, product, dplus2, dplus3, cyclic, cross, polygon, bipyramid, p4, p6, remark54")
      ->required();
  construct_cmd->add_option("--dim", c_dim, "Ambient dimension");
  construct_cmd->add_option("--nverts", c_nverts, "Vertex count (cyclic, polygon, polygon-based bipyramid)");
  construct_cmd->add_option("--dims", c_dims, "Simplex dimensions of a product")->delimiter(',');
  construct_cmd->add_option("--base", c_base, "Polytope document used as bipyramid base");

  std::string file;
  auto* volume_cmd = app.add_subcommand("volume", "Volume and facet summary");
  volume_cmd->add_option("file", file, "Polytope document")->required();

  double z_tol = kPropertyZTol;
  auto* checkz_cmd = app.add_subcommand("check-z", "First-order stationarity check");
  checkz_cmd->add_option("file", file, "Polytope document")->required();
  checkz_cmd->add_option("--tol", z_tol, "Residual tolerance");

  bool contract = false;
  auto* gale_cmd = app.add_subcommand("gale", "Gale diagram and predicates");
  gale_cmd->add_option("file", file, "Polytope document")->required();
  gale_cmd->add_flag("--contract", contract, "Also emit the contracted diagram");

  OptimizerConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  bool trajectories = false;
  auto add_opt_flags = [&](CLI::App* cmd, bool shape) {
    if (shape) {
      cmd->add_option("--dim", cfg.dim, "Dimension");
      cmd->add_option("--nverts", cfg.nverts, "Vertex count");
    }
    cmd->add_option("--starts", cfg.starts, "Random starts");
    cmd->add_option("--seed", seed_flag, "Base seed (falls back to SPHEREVOL_SEED, then 0)");
    cmd->add_option("--max-iter", cfg.max_iters, "Sweeps per start");
    cmd->add_option("--alpha", cfg.alpha, "Damping in (0, 1]");
    cmd->add_option("--tol", cfg.move_tol, "Stop when no vertex moves more than this in a sweep");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  };
  auto* optimize_cmd = app.add_subcommand("optimize", "Multi-start volume ascent");
  add_opt_flags(optimize_cmd, true);
  optimize_cmd->add_flag("--trajectories", trajectories, "Include per-sweep volumes of every start");

  std::string gram_case;
  auto* gram_cmd = app.add_subcommand("gram-solve", "Symmetric circulant Gram solutions");
  gram_cmd->add_option("--case", gram_case, "d4 or d6")->required()->check(CLI::IsMember({"d4", "d6"}));

  std::size_t dmax = 6;
  bool no_optimize = false;
  auto* table_cmd = app.add_subcommand("table", "CSV of closed forms against constructed and searched volumes");
  table_cmd->add_option("--dmax", dmax, "Largest dimension")->check(CLI::Range(2, 8));
  table_cmd->add_flag("--no-optimize", no_optimize, "Skip optimizer rows");

  std::size_t samples = 2000;
  double radius = 1e-3;
  auto* certify_cmd = app.add_subcommand("certify", "Stationarity plus sampled local perturbations");
  certify_cmd->add_option("file", file, "Polytope document")->required();
  certify_cmd->add_option("--samples", samples, "Perturbation samples");
  certify_cmd->add_option("--radius", radius, "Largest angular move");
  certify_cmd->add_option("--seed", seed_flag, "Sampling seed");

  std::size_t even_d = 4;
  auto* compare_cmd = app.add_subcommand("compare-even-d", "Cyclic vs product vs searched volume with d+3 vertices");
  compare_cmd->add_option("--dim", even_d, "4, 6 or 8");
  add_opt_flags(compare_cmd, false);

  std::vector<std::string> argv_store{"spherevol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const auto started = std::chrono::steady_clock::now();
  std::ostringstream body;
  try {
    if (*construct_cmd) {
      body << polytope_to_json(construct(family, c_dim, c_nverts, c_dims, c_base)) << "\n";
    } else if (*volume_cmd) {
      const auto p = load_polytope(file);
      const auto cx = triangulate_boundary(p);
      const bool interior = origin_interior(cx.facets);
      json j = {{"volume", interior ? volume(p, cx) : hull_volume(p, cx)},
                {"dim", p.dim()},
                {"n", p.size()},
                {"facets", cx.facets.size()},
                {"simplices", cx.simplices.size()},
                {"simplicial", is_simplicial(cx.facets, p.dim())},
                {"origin_interior", interior}};
      body << j.dump(2) << "\n";
    } else if (*checkz_cmd) {
      body << report_json(check_property_z(load_polytope(file), z_tol)).dump(2) << "\n";
    } else if (*gale_cmd) {
      const auto p = load_polytope(file);
      const auto g = gale_transform(p);
      const auto pred = diagram_predicates(g);
      json j = {{"diagram", diagram_json(g)}, {"simplicial", pred.simplicial}, {"pyramid", pred.pyramid}};
      if (g.codim <= 2) {
        const auto v = validate_diagram(g);
        j["valid"] = v.valid;
      }
      if (contract) {
        const auto c = contract_diagram(g);
        j["contracted"] = {{"diagram", diagram_json(c.diagram)}, {"contracted", c.contracted}, {"multiplicities", c.multiplicities}};
      }
      body << j.dump(2) << "\n";
    } else if (*optimize_cmd) {
      cfg.seed = resolve_seed(seed_flag);
      cfg.keep_trajectories = trajectories;
      const auto res = ascend(cfg);
      json starts = json::array();
      for (const auto& t : res.starts) starts.push_back(start_json(t, trajectories));
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      json manifest = {
          {"command", "optimize"},
          {"flags",
           {{"dim", cfg.dim},
            {"nverts", cfg.nverts},
            {"starts", cfg.starts},
            {"seed", cfg.seed},
            {"max_iter", cfg.max_iters},
            {"alpha", cfg.alpha},
            {"tol", cfg.move_tol},
            {"threads", cfg.threads},
            {"trajectories", trajectories}}},
          {"seed", cfg.seed},
          {"version", kVersion},
          {"wall_time_seconds", wall},
          {"result",
           {{"best_volume", res.best_volume},
            {"best_start", res.best_start},
            {"polytope", json::parse(polytope_to_json(res.best))},
            {"stationarity", res.stationarity ? report_json(*res.stationarity) : json(nullptr)},
            {"starts", starts}}}};
      body << manifest.dump(2) << "\n";
    } else if (*gram_cmd) {
      json j = {{"case", gram_case}};
      if (gram_case == "d4") {
        json sols = json::array();
        for (const auto& s : solve_symmetric_d4()) sols.push_back(circulant_json(s));
        j["n"] = 7;
        j["solutions"] = sols;
      } else {
        const auto rep = verify_symmetric_d6();
        json listed = json::array();
        for (const auto& s : rep.listed)
          listed.push_back({{"name", s.name},
                            {"residuals", residuals_json(s.residuals)},
                            {"rank", s.rank},
                            {"identification", identification_json(s.identification)},
                            {"natural_order_spread", s.natural_order_spread},
                            {"best_order_spread", s.best_order_spread}});
        json sols = json::array();
        for (const auto& s : rep.enumeration) sols.push_back(circulant_json(s));
        j["n"] = 9;
        j["listed"] = listed;
        j["solutions"] = sols;
        j["cyclic_in_r6"] = rep.cyclic_in_r6;
      }
      body << j.dump(2) << "\n";
    } else if (*table_cmd) {
      body << "d,n,family,closed_form_value,constructed_volume,residual\n";
      OptimizerConfig tcfg;
      tcfg.starts = 10;
      tcfg.max_iters = 1000;
      tcfg.keep_trajectories = false;
      tcfg.seed = resolve_seed(std::nullopt);
      for (std::size_t d = 2; d <= dmax; ++d) {
        for (std::size_t n = d + 1; n <= d + 3; ++n) {
          for (const auto& r : closed_form_records(d, n)) {
            const auto p = construct(r.construction, d, n, {}, "");
            const double v = volume(p);
            body << d << "," << n << "," << r.construction << "," << fmt17(r.value) << "," << fmt17(v) << ","
                 << fmt17(std::abs(v - r.value)) << "\n";
          }
          if (!no_optimize) {
            tcfg.dim = d;
            tcfg.nverts = n;
            const double best = ascend(tcfg).best_volume;
            const auto known = known_optimum(d, n);
            body << d << "," << n << ",optimizer," << (known ? fmt17(*known) : "") << "," << fmt17(best) << ","
                 << (known ? fmt17(std::abs(best - *known)) : "") << "\n";
          }
        }
      }
    } else if (*certify_cmd) {
      const auto c = certify(load_polytope(file), samples, radius, resolve_seed(seed_flag));
      json j = {{"residual", c.residual},       {"stationary", c.stationary}, {"samples", c.samples},
                {"evaluated", c.evaluated},     {"radius", c.radius},         {"worst_violation", c.worst_violation},
                {"violated", c.violated}};
      body << j.dump(2) << "\n";
    } else if (*compare_cmd) {
      cfg.seed = resolve_seed(seed_flag);
      cfg.keep_trajectories = false;
      const auto c = compare_even_d(even_d, cfg);
      json ordered = json::array();
      for (const auto& [name, v] : c.ordered) ordered.push_back({{"name", name}, {"volume", v}});
      json j = {{"d", c.d},
                {"n", c.n},
                {"cyclic_volume", c.cyclic_volume},
                {"product_volume", c.product_volume},
                {"optimizer_volume", c.optimizer_volume},
                {"product_beats_cyclic", c.product_beats_cyclic},
                {"experimental", c.experimental},
                {"ordered", ordered}};
      body << j.dump(2) << "\n";
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 2;
  }

  if (out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    f << body.str();
  }
  return 0;
}

}  // namespace spherevol
