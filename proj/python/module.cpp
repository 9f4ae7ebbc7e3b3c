#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubestrata/json_io.hpp"
#include "cubestrata/verify.hpp"

namespace py = pybind11;
using namespace cubestrata;

namespace {

HeightFunction heights_from_dict(const py::dict& d) {
  Json j = Json::object();
  for (auto item : d) j[py::cast<std::string>(item.first)] = py::cast<std::string>(py::str(item.second));
  return heights_from_json(j);
}

CoefficientAssignment coeffs_from_dict(const py::dict& d) {
  Json j = Json::object();
  for (auto item : d) j[py::cast<std::string>(item.first)] = py::cast<std::string>(py::str(item.second));
  return coefficients_from_json(j);
}

py::object json_to_py(const Json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

Subdivision subdivision_from_py(const py::object& cells) {
  py::module_ pyjson = py::module_::import("json");
  std::string dumped = py::cast<std::string>(pyjson.attr("dumps")(cells));
  return subdivision_from_json(Json::parse(dumped));
}

}  // namespace

PYBIND11_MODULE(_cubestrata, m) {
  m.doc() = "exact combinatorics of regular cube subdivisions and their degenerations";

  m.def("enumerate_subdivisions", [](bool up_to_symmetry) {
    py::list out;
    if (up_to_symmetry) {
      for (const SubdivisionOrbit& o : orbits(enumerate_all()))
        out.append(json_to_py(subdivision_to_json(o.representative)));
    } else {
      for (const Subdivision& s : enumerate_all()) out.append(json_to_py(subdivision_to_json(s)));
    }
    return out;
  }, py::arg("up_to_symmetry") = false);

  m.def("count_triangulations",
        [] { return enumeration_bundle().triangulations.size(); });

  m.def("from_heights", [](const py::dict& heights) {
    return json_to_py(subdivision_to_json(from_heights(heights_from_dict(heights))));
  });

  m.def("is_regular", [](const py::object& cells) {
    RegularityResult r = is_regular(subdivision_from_py(cells));
    py::dict out;
    out["regular"] = r.regular;
    if (r.regular) out["witness"] = json_to_py(heights_to_json(r.witness).at("heights"));
    return out;
  });

  m.def("stratum_dimension",
        [](const py::object& cells) { return stratum_dimension(subdivision_from_py(cells)); });

  m.def("bullet", [](const py::object& cells) {
    return json_to_py(subdivision_to_json(modify(subdivision_from_py(cells))));
  });

  m.def("bullet_heights", [](const py::dict& heights) {
    HeightModification hm = modify_heights(heights_from_dict(heights));
    py::dict out;
    out["heights"] = json_to_py(heights_to_json(hm.result).at("heights"));
    py::list drops;
    for (const auto& [apex, q] : hm.drops) {
      py::dict d;
      d["apex"] = vid_string(apex);
      d["q"] = rat_to_string(q);
      drops.append(d);
    }
    out["drops"] = drops;
    return out;
  });

  m.def("classify", [](const py::object& cells, const py::dict& coefficients) {
    return json_to_py(degeneration_to_json(
        classify_degeneration(subdivision_from_py(cells), coeffs_from_dict(coefficients))));
  });

  m.def("hyperdeterminant", [](const py::dict& coefficients) {
    return rat_to_string(hyperdeterminant_222(coeffs_from_dict(coefficients)));
  });

  m.def("h1_trivial", [](const py::object& cells) {
    return h1_torus(subdivision_from_py(cells)).trivial();
  });

  m.def("vinberg", [](const std::string& lattice, long max_height, long window) {
    GramLattice L = lattice == "even" ? lattice_even()
                                      : (lattice == "odd1" ? lattice_odd1() : lattice_odd2());
    std::optional<long> w;
    if (window > 0) w = window;
    VinbergRun run = vinberg_run(L, L.default_v0, max_height, w);
    return json_to_py(vinberg_to_json(run));
  }, py::arg("lattice"), py::arg("max_height") = 10, py::arg("window") = 0);

  m.def("odd1_subdiagram_classes",
        [](long window) { return json_to_py(subdiagrams_to_json(classify_subdiagrams_odd1(window, 4))); },
        py::arg("window") = 5);

  m.def("atlas", [] { return json_to_py(atlas_to_json(boundary_atlas())); });

  m.def("maximal_components", [] { return maximal_components(boundary_atlas()); });

  m.def("verify_all", [](uint64_t seed) {
    py::list out;
    for (const CriterionResult& r : run_all_criteria(seed)) {
      py::dict d;
      d["index"] = r.index;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 20240915);
}
