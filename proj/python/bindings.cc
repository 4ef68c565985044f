#include <digdom/arc_list.hh>
#include <digdom/families.hh>
#include <digdom/oracle.hh>
#include <digdom/products.hh>
#include <digdom/solvers.hh>
#include <digdom/verify.hh>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace digdom;

namespace
{
    auto timeout_options(double timeout_s) -> SolveOptions
    {
        return SolveOptions{std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000))};
    }

    /// (value, witness) for an optimum; raises TimeoutError otherwise.
    auto solved(const Solution & s) -> py::tuple
    {
        if (! s.solved()) {
            PyErr_SetString(PyExc_TimeoutError, ("no optimum within the budget; best witness has size " +
                std::to_string(s.value())).c_str());
            throw py::error_already_set();
        }
        return py::make_tuple(s.value(), s.witness.to_vector());
    }

    auto check_options(double timeout_s, std::size_t exact_threshold) -> CheckOptions
    {
        CheckOptions options;
        options.timeout = timeout_options(timeout_s).timeout;
        options.exact_threshold = exact_threshold;
        return options;
    }
}

PYBIND11_MODULE(_digdom, m)
{
    m.doc() = "Exact domination and packing invariants of digraphs and their products";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<FamilySpecError>(m, "FamilySpecError", PyExc_ValueError);
    py::register_exception<SuiteConfigError>(m, "SuiteConfigError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init([](std::size_t n, const std::vector<Arc> & arcs, std::vector<std::string> labels) {
            return Digraph(n, arcs, std::move(labels));
        }),
            py::arg("n"), py::arg("arcs") = std::vector<Arc>{}, py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("order", &Digraph::order)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def_property_readonly("labels", &Digraph::labels)
        .def("arcs", &Digraph::arcs)
        .def("has_arc", &Digraph::has_arc)
        .def("out_neighbours", [](const Digraph & d, Vertex v) { return d.out_neighbours(v).to_vector(); })
        .def("in_neighbours", [](const Digraph & d, Vertex v) { return d.in_neighbours(v).to_vector(); })
        .def("fingerprint", &Digraph::fingerprint)
        .def("__len__", &Digraph::order)
        .def("__eq__", &Digraph::operator==)
        .def("__repr__", [](const Digraph & d) {
            return "<Digraph n=" + std::to_string(d.order()) + " arcs=" + std::to_string(d.arc_count()) + ">";
        });

    m.def("parse_arc_list", &parse_arc_list, py::arg("text"));
    m.def("format_arc_list", &format_arc_list, py::arg("digraph"));
    m.def("family", py::overload_cast<const std::string &>(&make_family), py::arg("spec"),
        "Build a named construction such as 'Gm:3', 'Hm:3', 'C4:0202' or 'ditree:n=6,seed=42'.");

    m.def("cartesian_product", [](const Digraph & g, const Digraph & h) { return cartesian_product(g, h).digraph; });
    m.def("direct_product", [](const Digraph & g, const Digraph & h) { return direct_product(g, h).digraph; });
    m.def("is_ditree", &is_ditree);
    m.def("is_acyclic", &is_acyclic_digraph);
    m.def("min_in_degree", &min_in_degree);
    m.def("max_out_degree", &max_out_degree);

    m.def("domination_number", [](const Digraph & d, double timeout) { return solved(domination_number(d, timeout_options(timeout))); },
        py::arg("digraph"), py::arg("timeout") = 60.0);
    m.def("total_domination_number",
        [](const Digraph & d, double timeout) -> py::object {
            auto s = total_domination_number(d, timeout_options(timeout));
            if (! s)
                return py::none();
            return solved(*s);
        },
        py::arg("digraph"), py::arg("timeout") = 60.0);
    m.def("packing_number", [](const Digraph & d, double timeout) { return solved(packing_number(d, timeout_options(timeout))); },
        py::arg("digraph"), py::arg("timeout") = 60.0);
    m.def("open_packing_number",
        [](const Digraph & d, double timeout) { return solved(open_packing_number(d, timeout_options(timeout))); },
        py::arg("digraph"), py::arg("timeout") = 60.0);
    m.def("brute_force_invariant",
        [](const Digraph & d, const std::string & which) { return brute_force_invariant(d, invariant_from_string(which)); },
        py::arg("digraph"), py::arg("which"));

    m.def("_invariants_json",
        [](const Digraph & d, const std::string & id, double timeout, bool timing) {
            py::gil_scoped_release release;
            return to_json(compute_invariants(d, id, timeout_options(timeout)), d, timing).dump();
        },
        py::arg("digraph"), py::arg("id") = "", py::arg("timeout") = 60.0, py::arg("timing") = true);

    m.def("_run_suite",
        [](const std::string & config_text, unsigned jobs, std::optional<std::uint64_t> seed) {
            auto config = parse_suite_config_text(config_text);
            if (jobs > 0)
                config.jobs = jobs;
            if (seed)
                config.seed = *seed;
            std::vector<std::string> records, errors;
            SuiteSummary summary;
            {
                py::gil_scoped_release release;
                summary = run_suite(
                    config, [&](const VerificationRecord & r) { records.push_back(to_json_line(r)); },
                    [&](const std::string & e) { errors.push_back(e); });
            }
            return py::make_tuple(records, summary_json(summary).dump(), errors);
        },
        py::arg("config_text"), py::arg("jobs") = 0, py::arg("seed") = std::nullopt);
    m.def("default_suite_text", &default_suite_text);

    m.def("_check_vizing_json",
        [](const Digraph & g, const Digraph & h, double timeout, std::size_t exact_threshold) {
            return to_json_line(check_vizing_inequality(g, h, "", check_options(timeout, exact_threshold)));
        },
        py::arg("g"), py::arg("h"), py::arg("timeout") = 60.0, py::arg("exact_threshold") = 64);
    m.def("_check_half_bound_json",
        [](const Digraph & g, const Digraph & h, double timeout, std::size_t exact_threshold) {
            return to_json_line(check_half_vizing_bound(g, h, "", check_options(timeout, exact_threshold)));
        },
        py::arg("g"), py::arg("h"), py::arg("timeout") = 60.0, py::arg("exact_threshold") = 64);
}
