#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evconflict/document.hpp"
#include "evconflict/fusion.hpp"
#include "evconflict/measures.hpp"
#include "evconflict/sweep.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace evconflict;

namespace {

MassFunction bpa_from_python(const Frame& frame,
                             const std::vector<std::pair<std::vector<std::string>, double>>& items) {
  std::vector<MassAssignment> assignments;
  assignments.reserve(items.size());
  for (const auto& [members, mass] : items) assignments.push_back({members, mass});
  return make_bpa(frame, assignments);
}

py::list focal_to_python(const MassFunction& m) {
  py::list out;
  for (const auto& e : m.focal()) {
    out.append(py::make_tuple(render_subset(m.frame(), e.set), e.mass));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Conflict and correlation measures for Dempster-Shafer mass functions";

  auto error_type = py::exception<Error>(m, "EvConflictError", PyExc_ValueError);
  (void)error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("evconflict._core").attr("EvConflictError");
      py::object instance = type(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<Frame>(m, "Frame")
      .def(py::init([](std::vector<std::string> labels) { return make_frame(std::move(labels)); }),
           py::arg("labels"))
      .def_property_readonly("labels", &Frame::labels)
      .def("__len__", &Frame::size)
      .def("__eq__", [](const Frame& a, const Frame& b) { return a == b; })
      .def("__repr__", [](const Frame& f) {
        return "Frame(" + format_subset(f, f.full()) + ")";
      });

  py::class_<MassFunction>(m, "MassFunction")
      .def(py::init(&bpa_from_python), py::arg("frame"), py::arg("masses"),
           "Build a BPA from (labels, mass) pairs; duplicates are merged.")
      .def_property_readonly("frame", &MassFunction::frame)
      .def_property_readonly("focal", &focal_to_python)
      .def("mass",
           [](const MassFunction& bpa, const std::vector<std::string>& members) {
             return bpa.mass(parse_subset(bpa.frame(), members));
           })
      .def("__len__", &MassFunction::size)
      .def("__repr__", [](const MassFunction& bpa) {
        std::string out = "MassFunction(";
        bool first = true;
        for (const auto& e : bpa.focal()) {
          if (!first) out += ", ";
          out += format_subset(bpa.frame(), e.set) + ": " + std::to_string(e.mass);
          first = false;
        }
        return out + ")";
      });

  m.def("vacuous_bpa", &vacuous_bpa, py::arg("frame"));
  m.def("bpa_equal", &bpa_equal, py::arg("m1"), py::arg("m2"), py::arg("tol") = 1e-12);
  m.def(
      "jaccard",
      [](const Frame& frame, const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return jaccard(parse_subset(frame, a), parse_subset(frame, b));
      },
      py::arg("frame"), py::arg("a"), py::arg("b"));

  m.def("conflict_k", &conflict_k, py::arg("m1"), py::arg("m2"));
  m.def(
      "combine_dempster",
      [](const MassFunction& m1, const MassFunction& m2) {
        auto result = combine_dempster(m1, m2);
        return py::make_tuple(result.combined, result.k);
      },
      py::arg("m1"), py::arg("m2"), "Returns (combined, k).");

  m.def("correlation_degree", &correlation_degree, py::arg("m1"), py::arg("m2"));
  m.def("correlation_coefficient", &correlation_coefficient, py::arg("m1"), py::arg("m2"));
  m.def("conflict_kr", &conflict_kr, py::arg("m1"), py::arg("m2"));
  m.def("jousselme_distance", &jousselme_distance, py::arg("m1"), py::arg("m2"));
  m.def(
      "pignistic", [](const MassFunction& bpa) { return pignistic(bpa).p; }, py::arg("m"));
  m.def("dif_betp", &dif_betp, py::arg("m1"), py::arg("m2"));
  m.def("song_cor", &song_cor, py::arg("m1"), py::arg("m2"));

  py::class_<LiuConflict>(m, "LiuConflict")
      .def_readonly("k", &LiuConflict::k)
      .def_readonly("dif_betp", &LiuConflict::dif_betp)
      .def_readonly("epsilon", &LiuConflict::epsilon)
      .def_readonly("in_conflict", &LiuConflict::in_conflict);
  m.def("liu_cf", &liu_cf, py::arg("m1"), py::arg("m2"), py::arg("epsilon"));

  py::class_<ConflictReport>(m, "ConflictReport")
      .def_readonly("k", &ConflictReport::k)
      .def_readonly("d_bba", &ConflictReport::d_bba)
      .def_readonly("dif_betp", &ConflictReport::dif_betp)
      .def_readonly("cor", &ConflictReport::cor)
      .def_readonly("r_bpa", &ConflictReport::r_bpa)
      .def_readonly("k_r", &ConflictReport::k_r)
      .def_readonly("liu", &ConflictReport::liu);
  m.def("conflict_report", &conflict_report, py::arg("m1"), py::arg("m2"),
        py::arg("epsilon") = py::none());

  py::class_<GramCheck>(m, "GramCheck")
      .def_readonly("dimension", &GramCheck::dimension)
      .def_readonly("positive_definite", &GramCheck::positive_definite)
      .def_readonly("min_pivot", &GramCheck::min_pivot);
  m.def("gram_check", &gram_check, py::arg("n"));
  m.def("gram_positive_definite", &gram_positive_definite, py::arg("frame"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("prefix", &SweepRow::prefix)
      .def_readonly("label", &SweepRow::label)
      .def_readonly("k_r", &SweepRow::k_r)
      .def_readonly("d_bba", &SweepRow::d_bba)
      .def_readonly("k", &SweepRow::k);
  m.def("run_sweep", &run_sweep, py::arg("frame_size") = kSweepFrameSize);

  m.def(
      "parse_document",
      [](const std::string& text) {
        const auto doc = parse_document(text);
        py::dict bpas;
        for (const auto& entry : doc.bpas) bpas[py::str(entry.name)] = entry.bpa;
        return py::make_tuple(doc.frame, bpas);
      },
      py::arg("text"), "Returns (frame, {name: MassFunction}).");
  m.def(
      "dump_document",
      [](const Frame& frame, const std::vector<std::pair<std::string, MassFunction>>& bpas) {
        BpaDocument doc{frame, {}};
        for (const auto& [name, bpa] : bpas) doc.bpas.push_back({name, bpa});
        return dump_document(doc);
      },
      py::arg("frame"), py::arg("bpas"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
