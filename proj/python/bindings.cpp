#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "roughdxl/ingest.hpp"
#include "roughdxl/parser.hpp"
#include "roughdxl/query.hpp"
#include "roughdxl/rough_semantics.hpp"
#include "roughdxl/session.hpp"
#include "roughdxl/transform.hpp"

namespace py = pybind11;
using namespace roughdxl;

namespace {

py::dict to_python(const Valuation& v) {
    py::dict out;
    for (const auto& [name, term] : v.bindings()) out[py::str(name)] = term.name();
    return out;
}

py::list to_python(const ValuationSet& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_python(v));
    return out;
}

/// bool for ground answers, list of dicts for valuation sets, one of
/// "top"/"yes"/"no"/"bottom" for ground classify, dict of lists for a
/// non-ground classify.
py::object to_python(const Answer& a) {
    struct Visitor {
        py::object operator()(bool b) const { return py::bool_(b); }
        py::object operator()(const ValuationSet& vs) const { return to_python(vs); }
        py::object operator()(FourValued v) const { return py::str(to_string(v)); }
        py::object operator()(const ClassifyTriple& t) const {
            py::dict out;
            out["boundary"] = to_python(t.boundary);
            out["lower"] = to_python(t.lower);
            out["lower_neg"] = to_python(t.lower_neg);
            return out;
        }
    };
    return std::visit(Visitor{}, a);
}

py::list tuples(const TupleSet& ts) {
    py::list out;
    for (const auto& t : ts) out.append(py::tuple(py::cast(t)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rough-set deductive engine over extended logic programs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ProgramError>(m, "ProgramError", PyExc_ValueError);
    py::register_exception<QueryError>(m, "QueryError", PyExc_ValueError);
    py::register_exception<IngestError>(m, "IngestError", PyExc_ValueError);
    py::register_exception<LoadError>(m, "LoadError", PyExc_OSError);

    m.def(
        "canonical_program", [](const std::string& text) { return to_string(parse_program(text)); },
        py::arg("text"), "Parse a program and return it in canonical form.");
    m.def(
        "canonical_query", [](const std::string& text) { return to_string(parse_query(text)); }, py::arg("text"),
        "Parse a query and return it in canonical form.");
    m.def(
        "export_definite", [](const std::string& text) { return export_definite(parse_program(text)); },
        py::arg("text"), "Definite program with negated predicates renamed to <p>_neg.");
    m.def(
        "tau", [](const std::string& text) { return to_string(tau(parse_query(text))); }, py::arg("query"),
        "Goal over the renamed program for a simple query.");

    py::class_<Session>(m, "Session")
        .def(py::init<>())
        .def("load_program_text", &Session::load_program_text, py::arg("text"))
        .def("load_program_file", &Session::load_program_file, py::arg("path"))
        .def("load_table", &Session::load_table, py::arg("path"), py::arg("predicate"))
        .def(
            "load_table_text",
            [](Session& s, const std::string& csv, const std::string& predicate) {
                s.add_table(parse_table(csv, predicate));
            },
            py::arg("csv"), py::arg("predicate"))
        .def(
            "query", [](Session& s, const std::string& q) { return to_python(s.query(q)); }, py::arg("text"),
            "Answer a rough query as Python values.")
        .def(
            "ask", [](Session& s, const std::string& q) { return render(s.query(q)); }, py::arg("text"),
            "Answer a rough query in the REPL's text format.")
        .def(
            "step",
            [](Session& s, const std::string& line) {
                const auto r = s.step(line);
                return py::make_tuple(r.output, r.diagnostic, r.quit);
            },
            py::arg("line"), "Run one REPL line; returns (output, diagnostic, quit).")
        .def(
            "regions",
            [](Session& s, const std::string& predicate) {
                const RoughRelation& r = s.database().relation(predicate);
                py::dict out;
                out["upper"] = tuples(upper(r));
                out["lower"] = tuples(lower(r));
                out["boundary"] = tuples(boundary(r));
                out["lower_neg"] = tuples(lower(complement(r)));
                return out;
            },
            py::arg("predicate"))
        .def("model", [](Session& s) { return dump_regions(s.database()); })
        .def("relations", [](Session& s) { return summarize_relations(s.database()); })
        .def_property_readonly("program", [](const Session& s) { return to_string(s.program()); });
}
