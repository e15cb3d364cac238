#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knitweave/campaign.hpp"
#include "knitweave/hecke.hpp"
#include "knitweave/knitted.hpp"
#include "knitweave/skein.hpp"
#include "knitweave/table.hpp"

namespace py = pybind11;
using namespace knitweave;

namespace {

py::int_ to_py(const Integer& c) { return py::int_(py::str(c.get_str())); }

// {(v, z): coefficient}
py::dict vz_dict(const LaurentVZ& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::make_tuple(e.first, e.second)] = to_py(c);
  return d;
}

// {z: coefficient}
py::dict z_dict(const LaurentZ& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

LaurentVZ vz_from_dict(const py::dict& d) {
  LaurentVZ p;
  for (auto [key, value] : d) {
    auto e = key.cast<std::pair<int, int>>();
    p.add_term(e.first, e.second, Integer(py::str(value).cast<std::string>()));
  }
  return p;
}

py::dict theorem_dict(const TheoremReport& r) {
  py::dict d;
  d["seifert_count"] = r.seifert_count;
  d["sign"] = r.sign;
  d["h_minus"] = z_dict(r.h_minus);
  d["h_plus_ft"] = z_dict(r.h_plus_ft);
  d["h_minus_fast"] = z_dict(r.h_minus_fast);
  d["passed"] = r.passed();
  d["report"] = r.render();
  return d;
}

}  // namespace

PYBIND11_MODULE(_knitweave, m) {
  m.doc() = "HOMFLY polynomials of braid closures, PD codes and knitted diagrams";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidDiagram>(m, "InvalidDiagram", PyExc_ValueError);
  py::register_exception<NonPlanarDiagram>(m, "NonPlanarDiagram", PyExc_ValueError);
  py::register_exception<InvalidTemplate>(m, "InvalidTemplate", PyExc_ValueError);

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("__str__", &format_braid_word)
      .def("__repr__", [](const BraidWord& w) {
        return "BraidWord(" + std::to_string(w.strands) + ", [" + format_braid_word(w) + "])";
      });
  m.def("parse_braid_word", &parse_braid_word, py::arg("text"), py::arg("strands"));

  py::class_<PlanarDiagram>(m, "PlanarDiagram")
      .def_property_readonly("crossing_count", &PlanarDiagram::crossing_count)
      .def_property_readonly("free_loops", &PlanarDiagram::free_loops)
      .def_property_readonly("seifert_count", [](const PlanarDiagram& d) { return seifert_circles(d).count; })
      .def_property_readonly("writhe", &writhe)
      .def_property_readonly("components", &component_count)
      .def("is_planar", &planarity_check)
      .def("__str__", &format_pd);
  m.def("parse_pd", &parse_pd, py::arg("text"));
  m.def("braid_closure", &knitweave::braid_closure, py::arg("word"));

  py::class_<KnittedDiagram>(m, "KnittedDiagram")
      .def_static("from_json", &parse_knitted, py::arg("text"))
      .def_static("braid_closure", &KnittedDiagram::braid_closure, py::arg("word"))
      .def("to_json", [](const KnittedDiagram& k) { return to_json(k).dump(); })
      .def_property_readonly("box_count", [](const KnittedDiagram& k) { return k.knitting().box_count(); })
      .def_property_readonly("seifert_count", [](const KnittedDiagram& k) { return seifert_count(k.knitting()); })
      .def_property_readonly("words", &KnittedDiagram::words)
      .def("compile", &compile)
      .def("ft", &ft)
      .def("__eq__", [](const KnittedDiagram& a, const KnittedDiagram& b) { return a == b; });

  m.def("validate", [](const KnittedDiagram& k) {
    ValidationReport r = validate(k.knitting());
    return r.ok() ? std::string() : r.to_string();
  }, py::arg("diagram"), "Empty string if the template is a valid knitting pattern, else the issues.");

  // Polynomials cross the boundary as {(v, z): int} and {z: int} dicts.
  m.def("homfly_framed", [](const PlanarDiagram& d) { return vz_dict(homfly_framed(d)); }, py::arg("diagram"));
  m.def("homfly_unframed", [](const PlanarDiagram& d) { return vz_dict(homfly_unframed(d)); }, py::arg("diagram"));
  m.def("eval_hecke", [](const KnittedDiagram& k) { return vz_dict(eval_hecke(k)); }, py::arg("diagram"));
  m.def("extreme_minus_fast", [](const KnittedDiagram& k) { return z_dict(extreme_minus_fast(k)); },
        py::arg("diagram"));
  m.def("polynomial_string", [](const py::dict& d) { return vz_from_dict(d).to_string(); }, py::arg("poly"));
  m.def("render_table", [](const py::dict& d) { return render_table(vz_from_dict(d)); }, py::arg("poly"));

  m.def("verify_theorem", [](const KnittedDiagram& k, const std::string& evaluator) {
    VerifyOptions opts;
    if (evaluator == "skein")
      opts.evaluator = Evaluator::skein;
    else if (evaluator != "hecke")
      throw py::value_error("evaluator must be 'hecke' or 'skein'");
    return theorem_dict(verify_theorem(k, opts));
  }, py::arg("diagram"), py::arg("evaluator") = "hecke");

  m.def("hecke_expand", [](const BraidWord& w, const std::string& basis) {
    HeckeElement x = expand_word(w);
    if (basis == "npb")
      x = convert(x, Basis::npb);
    else if (basis != "ppb")
      throw py::value_error("basis must be 'ppb' or 'npb'");
    py::dict d;
    for (const auto& [perm, c] : x.coeffs()) d[py::tuple(py::cast(perm.images()))] = z_dict(c);
    return d;
  }, py::arg("word"), py::arg("basis") = "ppb", "{permutation one-line tuple: {z: coefficient}}");

  m.def("random_test", [](std::uint64_t seed, int count, int max_boxes, int max_strands, int max_length) {
    CampaignConfig c;
    c.seed = seed;
    c.count = count;
    c.bounds.max_boxes = max_boxes;
    c.bounds.max_strands = max_strands;
    c.bounds.max_word_length = max_length;
    CampaignSummary s;
    {
      py::gil_scoped_release release;
      s = run_campaign(c);
    }
    return py::make_tuple(s.passed_count(), static_cast<int>(s.samples.size()), s.render());
  }, py::arg("seed") = 0, py::arg("count") = 50, py::arg("max_boxes") = 3, py::arg("max_strands") = 3,
     py::arg("max_length") = 4, "Returns (passed, total, summary text).");
}
