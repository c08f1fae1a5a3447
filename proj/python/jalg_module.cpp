#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jalg/catalog.hpp"
#include "jalg/cli.hpp"
#include "jalg/deformation.hpp"
#include "jalg/io.hpp"
#include "jalg/morphism.hpp"

namespace py = pybind11;
using namespace jalg;

namespace {

LinearMap map_of(const std::string& text, const Algebra& src, const Algebra& dst, VarNames params) {
  return parse_map(text, src.basis(), dst.basis(), src.field(), params);
}

py::tuple verdict(const Verdict& v) { return py::make_tuple(v.ok(), v.summary()); }

}  // namespace

PYBIND11_MODULE(_jalg, m) {
  m.doc() = "exact computations with Jordan algebras, matched pairs and complements";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Algebra>(m, "Algebra")
      .def_static("parse", [](const std::string& text) { return parse_algebra(text); })
      .def_static("catalog", &catalog_algebra)
      .def_static("load", &load_algebra)
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("basis", &Algebra::basis)
      .def_property_readonly("field", [](const Algebra& a) { return a.field().name(); })
      .def("over", [](const Algebra& a, const std::string& f) { return a.over(Field::parse(f)); })
      .def("jordan_check", [](const Algebra& a) { return verdict(jordan_check(a)); })
      .def("text", &write_algebra)
      .def("__eq__", [](const Algebra& a, const Algebra& b) { return a == b; })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra dim " + std::to_string(a.dim()) + " over " + a.field().name() + ">";
      });

  py::class_<MatchedPair>(m, "MatchedPair")
      .def_static("parse", [](const std::string& text) { return parse_pair(text, load_algebra); })
      .def_static("catalog", &catalog_pair)
      .def_static("load", &load_pair)
      .def_property_readonly("A", [](const MatchedPair& p) { return p.A; })
      .def_property_readonly("V", [](const MatchedPair& p) { return p.V; })
      .def("over", [](const MatchedPair& p, const std::string& f) { return pair_over(p, Field::parse(f)); })
      .def("mp_check", [](const MatchedPair& p) { return verdict(mp_check(p)); })
      .def("bicross", [](const MatchedPair& p) { return bicross(p).product; })
      .def("text", &write_pair)
      .def("__eq__", [](const MatchedPair& p, const MatchedPair& q) { return p == q; });

  m.def("hom_check", [](const std::string& map, const Algebra& a, const Algebra& b) {
    return hom_check(map_of(map, a, b, a.params()), a, b);
  });
  m.def(
      "iso",
      [](const Algebra& a, const Algebra& b, const std::string& mode) {
        const IsoMode im = mode == "exhaustive" ? IsoMode::exhaustive : IsoMode::invariants;
        const IsoVerdict v = iso_search(a, b, im);
        py::object witness = py::none();
        if (v.witness) witness = py::str(v.witness->to_string(a.basis(), b.basis()));
        return py::make_tuple(to_string(v.outcome), witness);
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "exhaustive");

  m.def("deformation_check", [](const MatchedPair& p, const std::string& map) {
    return verdict(deformation_check(p, map_of(map, p.V, p.A, p.params())));
  });
  m.def("r_deform", [](const MatchedPair& p, const std::string& map) {
    return r_deform(p, map_of(map, p.V, p.A, p.params()));
  });
  m.def("enumerate_deformations", [](const MatchedPair& p) {
    std::vector<std::string> out;
    for (const auto& r : enumerate_deformations(p)) out.push_back(r.to_string(p.V.basis(), p.A.basis()));
    return out;
  });
  m.def("factorization_index", [](const MatchedPair& p) {
    const ComplementReport rep = factorization_index(p);
    py::dict d;
    d["index"] = rep.index;
    d["maps"] = rep.maps.size();
    d["partitions_agree"] = rep.partitions_agree;
    d["note"] = rep.note;
    return d;
  });

  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries()) out.push_back(e.name);
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
