#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynamo/coloring.hpp"
#include "dynamo/digraph_dynamo.hpp"
#include "dynamo/graph.hpp"
#include "dynamo/oracle.hpp"
#include "dynamo/reduction.hpp"
#include "dynamo/undirected_dynamo.hpp"

namespace py = pybind11;
using namespace dynamo;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Irreversible majority dynamos: coloring closure, constructive seed "
              "algorithms, the dominating-set gadget reduction and exact oracles";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_readonly("directed", &Graph::directed)
        .def_readonly("out_adj", &Graph::out_adj)
        .def_readonly("in_adj", &Graph::in_adj)
        .def("edge_count", &Graph::edge_count)
        .def("in_degree", &Graph::in_degree)
        .def("out_degree", &Graph::out_degree)
        .def("has_edge", &Graph::has_edge)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edge_count()) +
                   (g.directed ? ", directed" : ", undirected") + ")";
        });

    m.def("make_graph", &make_graph, py::arg("n"), py::arg("directed"), py::arg("edges"));
    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("graph"));
    m.def("parse_vertex_set", &parse_vertex_set, py::arg("text"), py::arg("n"));
    m.def("serialize_vertex_set", &serialize_vertex_set, py::arg("vertices"));

    py::class_<Diagnostics>(m, "Diagnostics")
        .def_readonly("is_simple", &Diagnostics::is_simple)
        .def_readonly("min_indegree", &Diagnostics::min_indegree)
        .def_readonly("is_connected", &Diagnostics::is_connected)
        .def_readonly("isolated_vertices", &Diagnostics::isolated_vertices);
    m.def("validate", &validate, py::arg("graph"));

    m.def(
        "generate",
        [](const std::string& kind, int n, int rows, int cols, double p, bool directed,
           std::uint64_t seed) {
            GenSpec spec;
            spec.family = graph_family_from_string(kind);
            spec.n = n;
            spec.rows = rows;
            spec.cols = cols;
            spec.p = p;
            spec.directed = directed;
            return generate(spec, seed);
        },
        py::arg("kind"), py::arg("n") = 0, py::arg("rows") = 0, py::arg("cols") = 0,
        py::arg("p") = 0.0, py::arg("directed") = false, py::arg("seed") = 0);

    m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));
    m.def("induced_components", &induced_components, py::arg("graph"), py::arg("subset"));

    py::class_<ThresholdScenario>(m, "ThresholdScenario")
        .def_static("strict_majority", &ThresholdScenario::strict_majority)
        .def_static("simple_majority", &ThresholdScenario::simple_majority)
        .def_static("fraction", &ThresholdScenario::fraction, py::arg("k"))
        .def("required", &ThresholdScenario::required, py::arg("indegree"))
        .def("activates", &ThresholdScenario::activates, py::arg("white"), py::arg("indegree"))
        .def("name", &ThresholdScenario::name)
        .def("__repr__", [](const ThresholdScenario& s) { return "ThresholdScenario(" + s.name() + ")"; });

    py::class_<Activation>(m, "Activation")
        .def_readonly("vertex", &Activation::vertex)
        .def_readonly("white_in_neighbors", &Activation::white_in_neighbors);

    py::class_<ColoringResult>(m, "ColoringResult")
        .def_readonly("white", &ColoringResult::white)
        .def_readonly("trace", &ColoringResult::trace)
        .def_readonly("seeds", &ColoringResult::seeds)
        .def("covers", &ColoringResult::covers, py::arg("graph"));

    m.def("closure", &closure, py::arg("graph"), py::arg("seeds"), py::arg("scenario"));
    m.def("is_dynamo", &is_dynamo, py::arg("graph"), py::arg("seeds"), py::arg("scenario"));

    py::class_<Partition>(m, "Partition")
        .def_readonly("k", &Partition::k)
        .def_readonly("blocks", &Partition::blocks);
    m.def("initial_partition", &initial_partition, py::arg("graph"), py::arg("k"));
    m.def("eta", &eta, py::arg("graph"), py::arg("partition"));
    m.def("refine_step", &refine_step, py::arg("graph"), py::arg("partition"));

    py::class_<DirectedDynamoResult>(m, "DirectedDynamoResult")
        .def_readonly("seeds", &DirectedDynamoResult::seeds)
        .def_readonly("iterations", &DirectedDynamoResult::iterations);
    m.def("find_dynamo_directed", &find_dynamo_directed, py::arg("graph"), py::arg("k"));

    py::class_<UndirectedDynamoResult>(m, "UndirectedDynamoResult")
        .def_readonly("seeds", &UndirectedDynamoResult::seeds)
        .def_readonly("iterations", &UndirectedDynamoResult::iterations)
        .def_readonly("psi_traces", &UndirectedDynamoResult::psi_traces);
    m.def("find_dynamo_undirected", &find_dynamo_undirected, py::arg("graph"));

    py::class_<GadgetMap>(m, "GadgetMap")
        .def_readonly("source", &GadgetMap::source)
        .def_property_readonly("z1", [](const GadgetMap& g) { return g.z1; })
        .def_property_readonly("z2", [](const GadgetMap& g) { return g.z2; })
        .def_property_readonly("g1", [](const GadgetMap& g) { return g.g1; })
        .def_property_readonly("g2", [](const GadgetMap& g) { return g.g2; })
        .def("gadget_size", &GadgetMap::gadget_size)
        .def("w_id", &GadgetMap::w_id, py::arg("v"))
        .def("x_id", &GadgetMap::x_id, py::arg("v"), py::arg("i"))
        .def("y_id", &GadgetMap::y_id, py::arg("v"), py::arg("i"));

    m.def("build_gadget", &build_gadget, py::arg("source"));
    m.def("domset_to_dynamo", &domset_to_dynamo, py::arg("map"), py::arg("domset"));
    m.def("dynamo_to_domset", &dynamo_to_domset, py::arg("map"), py::arg("seeds"));
    m.def("blocking_set", &blocking_set, py::arg("map"), py::arg("v"));
    m.def("greedy_domset", &greedy_domset, py::arg("graph"));
    m.def("is_dominating", &is_dominating, py::arg("graph"), py::arg("candidate"));
    m.def("serialize_gadget_map", &serialize_gadget_map, py::arg("map"));
    m.def("parse_gadget_map", &parse_gadget_map, py::arg("text"), py::arg("source"));

    py::class_<GadgetCheckReport>(m, "GadgetCheckReport")
        .def_readonly("bipartite_by_roles", &GadgetCheckReport::bipartite_by_roles)
        .def_readonly("z1_eccentricity_ok", &GadgetCheckReport::z1_eccentricity_ok)
        .def_readonly("z1_eccentricity", &GadgetCheckReport::z1_eccentricity)
        .def_readonly("degrees_all_odd", &GadgetCheckReport::degrees_all_odd)
        .def_readonly("vertex_formula_ok", &GadgetCheckReport::vertex_formula_ok)
        .def_readonly("edge_formula_ok", &GadgetCheckReport::edge_formula_ok)
        .def_readonly("closures_coincide", &GadgetCheckReport::closures_coincide)
        .def("all_ok", &GadgetCheckReport::all_ok);
    m.def("check_gadget_invariants", &check_gadget_invariants, py::arg("gadget"), py::arg("map"),
          py::arg("trials") = 20, py::arg("seed") = 1);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("optimum_size", &OracleResult::optimum_size)
        .def_readonly("witness", &OracleResult::witness)
        .def_readonly("subsets_examined", &OracleResult::subsets_examined)
        .def_readonly("budget_exhausted", &OracleResult::budget_exhausted)
        .def("found", &OracleResult::found);
    m.def("min_dynamo_bruteforce", &min_dynamo_bruteforce, py::arg("graph"), py::arg("scenario"),
          py::arg("max_size"));
    m.def("min_domset_bruteforce", &min_domset_bruteforce, py::arg("graph"));
}
