#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fgbetti/bench.hpp"
#include "fgbetti/betti_r2.hpp"
#include "fgbetti/io.hpp"
#include "fgbetti/oracle.hpp"

namespace py = pybind11;
using namespace fgb;

namespace {

// grades cross the boundary as exact values: a tuple of canonical decimal
// strings for R^n, a plain element index for finite posets
py::object grade_to_py(const poset& ps, const grade& g) {
	if (!ps.is_rn()) return py::int_(g.elem);
	py::tuple t(ps.arity());
	for (int i = 0; i < ps.arity(); ++i) t[i] = py::str(g.coords[i].str());
	return t;
}

py::list table_to_py(const poset& ps, const betti_table& t) {
	py::list out;
	for (const grade& g : t) out.append(grade_to_py(ps, g));
	return out;
}

py::list entries_to_py(const std::vector<matrix_entry>& es) {
	py::list out;
	for (const matrix_entry& e : es) out.append(py::make_tuple(e.row, e.col, e.coeff));
	return out;
}

dendro_backend backend_from(const std::string& name) {
	if (name == "fast") return dendro_backend::fast;
	if (name == "naive") return dendro_backend::naive;
	throw std::invalid_argument("backend must be 'fast' or 'naive'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
	m.doc() = "minimal presentations and betti tables of 0-dimensional persistent "
	          "homology of poset-filtered graphs";

	py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
	py::register_exception<descriptor_error>(m, "DescriptorError", PyExc_ValueError);
	py::register_exception<poset_error>(m, "PosetError", PyExc_ValueError);
	py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
	py::register_exception<io_error>(m, "IOError", PyExc_OSError);

	py::class_<filtered_graph>(m, "FilteredGraph")
	    .def_property_readonly("num_vertices", [](const filtered_graph& g) { return g.vertices.size(); })
	    .def_property_readonly("num_edges", [](const filtered_graph& g) { return g.edges.size(); })
	    .def_property_readonly("arity",
	                           [](const filtered_graph& g) { return g.ps.is_rn() ? g.ps.arity() : 0; })
	    .def("vertex_ids",
	         [](const filtered_graph& g) {
		         std::vector<std::string> ids;
		         for (const auto& v : g.vertices) ids.push_back(v.id);
		         return ids;
	         })
	    .def("edge_ids",
	         [](const filtered_graph& g) {
		         std::vector<std::string> ids;
		         for (const auto& e : g.edges) ids.push_back(e.id);
		         return ids;
	         })
	    .def("edge_index", [](const filtered_graph& g, const std::string& id) { return g.edge_index(id); })
	    .def("vertex_grade",
	         [](const filtered_graph& g, int v) {
		         if (v < 0 || v >= (int)g.vertices.size()) throw py::index_error();
		         return grade_to_py(g.ps, g.vertices[v].g);
	         })
	    .def("edge_grade",
	         [](const filtered_graph& g, int e) {
		         if (e < 0 || e >= (int)g.edges.size()) throw py::index_error();
		         return grade_to_py(g.ps, g.edges[e].g);
	         })
	    .def("edge_endpoints",
	         [](const filtered_graph& g, int e) {
		         if (e < 0 || e >= (int)g.edges.size()) throw py::index_error();
		         return py::make_tuple(g.edges[e].u, g.edges[e].v);
	         })
	    .def("__repr__", [](const filtered_graph& g) {
		    return "<FilteredGraph " + std::to_string(g.vertices.size()) + " vertices, " +
		           std::to_string(g.edges.size()) + " edges>";
	    });

	py::class_<multicritical_graph>(m, "MulticriticalGraph")
	    .def_property_readonly("num_vertices",
	                           [](const multicritical_graph& g) { return g.vertices.size(); })
	    .def_property_readonly("num_edges", [](const multicritical_graph& g) { return g.edges.size(); })
	    .def("__repr__", [](const multicritical_graph& g) {
		    return "<MulticriticalGraph " + std::to_string(g.vertices.size()) + " vertices, " +
		           std::to_string(g.edges.size()) + " edges>";
	    });

	m.def(
	    "parse_graph",
	    [](const std::string& text, const std::string& base_dir) {
		    std::istringstream in(text);
		    return parse_graph(in, base_dir);
	    },
	    py::arg("text"), py::arg("base_dir") = ".");
	m.def("load_graph", &load_graph, py::arg("path"));
	m.def("write_graph", &write_graph, py::arg("graph"));

	m.def(
	    "parse_multicritical",
	    [](const std::string& text, const std::string& base_dir) {
		    std::istringstream in(text);
		    return parse_multicritical(in, base_dir);
	    },
	    py::arg("text"), py::arg("base_dir") = ".");
	m.def("load_multicritical", &load_multicritical, py::arg("path"));
	m.def("write_multicritical", &write_multicritical, py::arg("graph"));

	m.def(
	    "validate", [](const filtered_graph& g) { return validate(g); }, py::arg("graph"));
	m.def(
	    "validate_multicritical", [](const multicritical_graph& g) { return validate(g); },
	    py::arg("graph"));

	m.def(
	    "vertex_minimize",
	    [](const filtered_graph& g) {
		    collapse_result r = vertex_minimize(g);
		    py::dict out;
		    out["graph"] = std::move(r.graph);
		    out["beta0"] = table_to_py(g.ps, r.beta0);
		    out["vertex_map"] = r.vertex_map;
		    return out;
	    },
	    py::arg("graph"));

	m.def(
	    "minimal_presentation",
	    [](const filtered_graph& g) {
		    minpres_result r = minimal_presentation(g);
		    py::dict out;
		    out["rows"] = table_to_py(g.ps, r.pres.rows);
		    out["cols"] = table_to_py(g.ps, r.pres.cols);
		    out["entries"] = entries_to_py(r.pres.entries);
		    out["graph"] = std::move(r.graph);
		    out["vertex_map"] = r.vertex_map;
		    return out;
	    },
	    py::arg("graph"));

	m.def(
	    "betti_r2",
	    [](const filtered_graph& g, const std::string& backend) {
		    betti_report r = betti_r2(g, backend_from(backend));
		    py::dict out;
		    out["beta0"] = table_to_py(g.ps, r.beta0);
		    out["beta1"] = table_to_py(g.ps, r.beta1);
		    out["beta2"] = table_to_py(g.ps, r.beta2);
		    out["beta0_h1"] = table_to_py(g.ps, r.beta0_h1);
		    out["entries"] = entries_to_py(r.entries);
		    return out;
	    },
	    py::arg("graph"), py::arg("backend") = "fast");

	m.def(
	    "witness_grade",
	    [](const filtered_graph& g, int edge) { return grade_to_py(g.ps, witness_grade(g, edge)); },
	    py::arg("graph"), py::arg("edge"));

	m.def(
	    "one_criticalize",
	    [](const multicritical_graph& g) {
		    onecrit_result r = one_criticalize(g);
		    py::dict out;
		    out["graph"] = std::move(r.graph);
		    out["provenance"] = r.provenance;
		    return out;
	    },
	    py::arg("graph"));

	m.def(
	    "koszul_all",
	    [](const filtered_graph& g, int p, int axis_cap) {
		    grade_grid grid = grade_grid::from_graph(g, axis_cap);
		    koszul_report r = koszul_all(g, grid, p);
		    py::dict out;
		    py::list beta;
		    for (const betti_table& t : r.beta) beta.append(table_to_py(g.ps, t));
		    out["beta"] = beta;
		    out["beta0_h1"] = table_to_py(g.ps, r.beta0_h1);
		    return out;
	    },
	    py::arg("graph"), py::arg("p") = 2, py::arg("axis_cap") = 64);

	m.def(
	    "verify",
	    [](const filtered_graph& g, int axis_cap) {
		    grade_grid grid = grade_grid::from_graph(g, axis_cap);
		    verify_report r = verify_presentation(g, minimal_presentation(g).pres, grid);
		    return py::make_tuple(r.ok, r.reason);
	    },
	    py::arg("graph"), py::arg("axis_cap") = 64);

	m.def(
	    "random_graph",
	    [](uint64_t seed, int vertices, int edges, int grid, int arity) {
		    bench_config cfg;
		    cfg.seed = seed;
		    cfg.vertices = vertices;
		    cfg.edges = edges;
		    cfg.grid = grid;
		    cfg.arity = arity;
		    return random_graph(cfg);
	    },
	    py::arg("seed"), py::arg("vertices") = 16, py::arg("edges") = 32, py::arg("grid") = 8,
	    py::arg("arity") = 2);
}
