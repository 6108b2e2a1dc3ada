#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spherevol/cli.hpp"
#include "spherevol/constructions.hpp"
#include "spherevol/errors.hpp"
#include "spherevol/gale.hpp"
#include "spherevol/gram.hpp"
#include "spherevol/optimizer.hpp"
#include "spherevol/stationarity.hpp"

namespace py = pybind11;
using namespace spherevol;

namespace {

py::dict stationarity_dict(const StationarityReport& r) {
  py::list residuals;
  for (const auto& v : r.vertices) residuals.append(v.residual);
  py::dict d;
  d["max_residual"] = r.max_residual;
  d["tol"] = r.tol;
  d["satisfies"] = r.satisfies;
  d["residuals"] = residuals;
  return d;
}

py::dict circulant_dict(const CirculantSolution& s) {
  py::dict d;
  d["n"] = s.n;
  d["params"] = s.params;
  d["frequencies"] = s.frequencies;
  d["lambda"] = s.lambda;
  d["vector_residual"] = s.residuals.vector_residual;
  d["product_residual"] = s.residuals.product_residual;
  d["rank"] = s.rank;
  d["identification"] = s.identification.label;
  d["reason"] = s.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spherevol, m) {
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<InscribedPolytope>(m, "Polytope")
      .def(py::init<std::size_t, std::vector<Vec>>(), py::arg("dim"), py::arg("vertices"))
      .def_static("normalized", &InscribedPolytope::normalized, py::arg("dim"), py::arg("vertices"))
      .def_static("from_json", &polytope_from_json_text, py::arg("text"))
      .def("to_json", &polytope_to_json)
      .def_property_readonly("dim", &InscribedPolytope::dim)
      .def_property_readonly("vertices", &InscribedPolytope::vertices)
      .def("__len__", &InscribedPolytope::size)
      .def("__repr__", [](const InscribedPolytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + " n=" + std::to_string(p.size()) + ">";
      });

  m.def("regular_simplex", &regular_simplex_polytope, py::arg("d"));
  m.def("optimal_dplus2", &optimal_dplus2, py::arg("d"));
  m.def("optimal_dplus3", &optimal_dplus3, py::arg("d"));
  m.def("cyclic_trig", &cyclic_trig, py::arg("d"), py::arg("n"));
  m.def("regular_polygon", &regular_polygon, py::arg("n"));
  m.def("cross_polytope", &cross_polytope, py::arg("d"));
  m.def("bipyramid", &bipyramid, py::arg("base"));
  m.def("p4", &p4);
  m.def("p6", &p6);
  m.def("remark54_3polytope", &remark54_3polytope);

  m.def("volume", py::overload_cast<const InscribedPolytope&>(&volume), py::arg("polytope"));
  m.def("hull_volume", py::overload_cast<const InscribedPolytope&>(&hull_volume), py::arg("polytope"));
  m.def("is_simplicial", py::overload_cast<const InscribedPolytope&>(&is_simplicial), py::arg("polytope"));
  m.def("facets", [](const InscribedPolytope& p) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : enumerate_facets(p)) out.push_back(f.vertex_indices);
    return out;
  }, py::arg("polytope"));

  m.def("check_property_z", [](const InscribedPolytope& p, double tol) {
    return stationarity_dict(check_property_z(p, tol));
  }, py::arg("polytope"), py::arg("tol") = kPropertyZTol);

  m.def("gale_transform", [](const InscribedPolytope& p) {
    const auto g = gale_transform(p);
    py::dict d;
    d["codim"] = g.codim;
    d["points"] = g.points;
    return d;
  }, py::arg("polytope"));
  m.def("is_face", [](const InscribedPolytope& p, std::vector<std::size_t> subset) {
    std::sort(subset.begin(), subset.end());
    return is_face(gale_transform(p), subset);
  }, py::arg("polytope"), py::arg("subset"));
  m.def("contracted_multiplicities", [](const InscribedPolytope& p) {
    const auto c = contract_diagram(gale_transform(p));
    py::dict d;
    d["contracted"] = c.contracted;
    d["multiplicities"] = c.multiplicities;
    return d;
  }, py::arg("polytope"));

  m.def("ascend", [](std::size_t dim, std::size_t nverts, std::size_t starts, std::uint64_t seed, std::size_t max_iters,
                     double alpha, double tol, unsigned threads) {
    OptimizerConfig c;
    c.dim = dim;
    c.nverts = nverts;
    c.starts = starts;
    c.seed = seed;
    c.max_iters = max_iters;
    c.alpha = alpha;
    c.move_tol = tol;
    c.threads = threads;
    c.keep_trajectories = false;
    OptimizerResult r = [&] {
      py::gil_scoped_release release;
      return ascend(c);
    }();
    py::dict d;
    d["best_volume"] = r.best_volume;
    d["best_start"] = r.best_start;
    d["polytope"] = r.best;
    d["stationarity"] = r.stationarity ? py::object(stationarity_dict(*r.stationarity)) : py::none();
    py::list finals;
    for (const auto& s : r.starts) finals.append(s.final_volume);
    d["final_volumes"] = finals;
    return d;
  }, py::arg("dim"), py::arg("nverts"), py::arg("starts") = 50, py::arg("seed") = 0, py::arg("max_iters") = 2000,
     py::arg("alpha") = 0.5, py::arg("tol") = 1e-10, py::arg("threads") = 0);

  m.def("certify", [](const InscribedPolytope& p, std::size_t samples, double radius, std::uint64_t seed) {
    const auto c = certify(p, samples, radius, seed);
    py::dict d;
    d["residual"] = c.residual;
    d["stationary"] = c.stationary;
    d["evaluated"] = c.evaluated;
    d["worst_violation"] = c.worst_violation;
    d["violated"] = c.violated;
    return d;
  }, py::arg("polytope"), py::arg("samples") = 1000, py::arg("radius") = 1e-3, py::arg("seed") = 0);

  m.def("solve_symmetric_d4", [] {
    py::list out;
    for (const auto& s : solve_symmetric_d4()) out.append(circulant_dict(s));
    return out;
  });
  m.def("solve_symmetric_circulant", [](std::size_t n) {
    py::list out;
    for (const auto& s : solve_symmetric_circulant(n)) out.append(circulant_dict(s));
    return out;
  }, py::arg("n"));
  m.def("identify", [](const std::vector<Vec>& points) { return identify_realization(points).label; },
        py::arg("points"));
  m.def("loewner_satisfied", [](const std::vector<Vec>& points, const Vec& lambdas, double tol) {
    return loewner_check(points, lambdas).satisfied(tol);
  }, py::arg("points"), py::arg("lambdas"), py::arg("tol") = 1e-9);

}
