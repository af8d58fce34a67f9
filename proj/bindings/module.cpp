#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>

#include "latscat/catalog.hpp"
#include "latscat/errors.hpp"
#include "latscat/figures.hpp"
#include "latscat/verify.hpp"
#include "latscat/wave.hpp"
#include "latscat/wold.hpp"

namespace py = pybind11;
using namespace latscat;

namespace {

std::optional<std::pair<int, int>> image_tuple(const SiteImage& img) {
  if (!img) return std::nullopt;
  return std::make_pair(img->x, img->j);
}

Direction parse_direction(const std::string& d) {
  if (d == "+") return Direction::plus;
  if (d == "-") return Direction::minus;
  throw ParamError("direction must be + or -");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice scattering models on the discrete half-space";

  py::register_exception<RuleDefinitionError>(m, "RuleDefinitionError");
  py::register_exception<NoStabilization>(m, "NoStabilization");
  py::register_exception<NotIsometry>(m, "NotIsometryError");
  py::register_exception<UnknownOperator>(m, "UnknownOperatorError");
  py::register_exception<ParamError>(m, "ParamError");

  py::class_<Catalog>(m, "Catalog")
      .def(py::init([](int z, int l) { return Catalog(ModelParams{z, l}); }),
           py::arg("z") = 2, py::arg("l") = 3)
      .def("names", &Catalog::names)
      .def("has", &Catalog::has, py::arg("name"))
      .def(
          "apply",
          [](const Catalog& cat, const std::string& name, int x, int j) {
            if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
            return image_tuple(cat.at(name)->image(Site(x, j)));
          },
          py::arg("name"), py::arg("x"), py::arg("j"),
          "Image of the basis vector at (x, j): an (x, j) tuple, or None if annihilated")
      .def(
          "table_json",
          [](const Catalog& cat, const std::string& name, int radius) {
            if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
            return OpTable::materialize(*cat.at(name), radius, name).to_json().dump();
          },
          py::arg("name"), py::arg("radius"),
          "Materialized operator table on the window, as a JSON string")
      .def(
          "wave_table_json",
          [](const Catalog& cat, const std::string& u, const std::string& u0,
             const std::string& direction, int radius, int guard, int margin, int cap) {
            const EvolutionPair pair = make_evolution_pair(cat, u, u0);
            const Window w(radius, guard);
            const OpTable t =
                wave_operator_table(pair, parse_direction(direction), w, WaveOptions{margin, cap});
            return t.to_json().dump();
          },
          py::arg("u"), py::arg("u0"), py::arg("direction"), py::arg("radius"),
          py::arg("guard") = 4, py::arg("margin") = 2, py::arg("cap") = 0,
          "Iteratively computed wave-operator table, as a JSON string")
      .def(
          "scattering_table_json",
          [](const Catalog& cat, const std::string& u, const std::string& u0, int radius,
             int guard) {
            const EvolutionPair pair = make_evolution_pair(cat, u, u0);
            return scattering_operator(pair, Window(radius, guard)).to_json().dump();
          },
          py::arg("u"), py::arg("u0"), py::arg("radius"), py::arg("guard") = 4,
          "Scattering-operator table computed from the two wave operators, as a JSON string")
      .def(
          "wold_report_json",
          [](const Catalog& cat, const std::string& name, int radius, int guard) {
            if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
            const Window w(radius, guard);
            const OpTable t = OpTable::materialize(*cat.at(name), w.extended_radius(), name);
            return wold_decompose(t, w).to_json().dump();
          },
          py::arg("name"), py::arg("radius"), py::arg("guard") = 4,
          "Wold decomposition report of an isometry, as a JSON string")
      .def(
          "render_svg",
          [](const Catalog& cat, const std::string& name, int radius) {
            if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
            const OpTable t = OpTable::materialize(*cat.at(name), radius, name);
            return render_svg(t, DiagramSpec{radius});
          },
          py::arg("name"), py::arg("radius"), "Deterministic SVG arrow diagram")
      .def(
          "render_ascii",
          [](const Catalog& cat, const std::string& name, int radius) {
            if (!cat.has(name)) throw UnknownOperator("unknown operator: " + name);
            const OpTable t = OpTable::materialize(*cat.at(name), radius, name);
            return render_ascii(t, DiagramSpec{radius});
          },
          py::arg("name"), py::arg("radius"), "ASCII arrow diagram");

  m.def(
      "verify",
      [](int radius, int guard, int z, int l) {
        const Catalog cat(ModelParams{z, l});
        py::list out;
        for (const CheckResult& r : run_all_checks(cat, Window(radius, guard))) {
          py::dict d;
          d["name"] = r.name;
          d["status"] = check_status_str(r.status);
          d["note"] = r.note;
          d["counterexamples"] = static_cast<int>(r.counterexamples.size());
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("radius") = 20, py::arg("guard") = 4, py::arg("z") = 2, py::arg("l") = 3,
      "Run the full verification manifest; returns one dict per check");
}
