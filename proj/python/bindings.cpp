#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "longhom/cli.hpp"
#include "longhom/errors.hpp"
#include "longhom/json_io.hpp"
#include "longhom/poset.hpp"
#include "longhom/symmap.hpp"

namespace py = pybind11;
using namespace longhom;

namespace {

// "uud" shorthand or a sequence JSON document; normalized on load.
DirectionSeq load_seq(const std::string& text) {
  if (!text.empty() && text.front() == '{') return normalize(json::seq_from_json(json::parse(text)));
  return DirectionSeq::from_dirs(text);
}

std::string dump_set(const IntervalSet& w) { return json::dump(json::set_to_json(w)); }

py::tuple classes(const std::string& seq, std::size_t max_parts, std::uint64_t shift_bound) {
  const DirectionSeq s = load_seq(seq);
  std::vector<std::string> out;
  bool complete = true;
  if (s.is_finite()) {
    for (const auto& w : enumerate_adapted_finite(s)) out.push_back(dump_set(w));
  } else {
    const AdaptedFamily f = enumerate_adapted(s, {max_parts, shift_bound});
    for (const auto& w : f.classes) out.push_back(dump_set(w));
    complete = f.completeness == Completeness::Complete;
  }
  return py::make_tuple(out, complete);
}

py::tuple check(const std::string& seq, const std::string& subset) {
  const DirectionSeq s = load_seq(seq);
  const AdaptedVerdict v = is_adapted(s, parse_interval_set(s.alpha(), subset));
  return py::make_tuple(v.adapted, v.witness ? py::object(py::str(v.witness->to_string())) : py::object(py::none()));
}

bool maps_homotopic(const std::string& map1, const std::string& map2) {
  return homotopic(json::map_from_json(json::parse(map1)), json::map_from_json(json::parse(map2)));
}

py::tuple diagonal(const std::string& family) {
  const IntervalSet d = diagonal_intersection(json::family_from_json(json::parse(family)));
  return py::make_tuple(dump_set(d), d.universe().is_limit() ? py::object(py::bool_(d.is_club())) : py::object(py::none()));
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homotopy classes of maps from long surfaces, decided symbolically";

  static py::exception<Error> error(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<BoundError>(m, "BoundError", error.ptr());
  py::register_exception<CyclicPreorder>(m, "CyclicPreorder", error.ptr());
  py::register_exception<InconsistentMap>(m, "InconsistentMap", error.ptr());

  m.def("normalize_ordinal", [](const std::string& text) { return parse_ordinal(text).to_string(); });
  m.def("normalize_seq", [](const std::string& seq) { return json::dump(json::seq_to_json(load_seq(seq))); });
  m.def("classes", &classes, py::arg("seq"), py::arg("max_parts") = 4, py::arg("shift_bound") = 4);
  m.def("check", &check, py::arg("seq"), py::arg("subset"));
  m.def("homotopic", &maps_homotopic, py::arg("map1"), py::arg("map2"));
  m.def("diagonal", &diagonal, py::arg("family"));
  m.def("export_dot", [](const std::string& seq) { return PosetView(load_seq(seq)).export_dot(); });
  m.def("run_cli", &cli, py::arg("args"));
}
