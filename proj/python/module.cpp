#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "rainbow/cnf.hpp"
#include "rainbow/graph_algorithms.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/recognize.hpp"
#include "rainbow/reduce.hpp"
#include "rainbow/verify.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

py::object witness_obj(const EdgeColoredGraph& g, const std::optional<PathWitness>& w) {
  if (!w) return py::none();
  py::list vertices, colors;
  for (Vertex v : w->vertices) vertices.append(g.vertex_name(v));
  for (Color c : w->colors) colors.append(g.color_name(c));
  py::dict out;
  out["vertices"] = vertices;
  out["colors"] = colors;
  return out;
}

py::dict verdict_dict(const EdgeColoredGraph& g, const Verdict& v) {
  py::dict out;
  out["yes"] = v.yes;
  if (v.failing_pair)
    out["failing_pair"] = py::make_tuple(g.vertex_name(v.failing_pair->first),
                                         g.vertex_name(v.failing_pair->second));
  else
    out["failing_pair"] = py::none();
  out["algorithm"] = v.algorithm;
  out["pairs_checked"] = v.stats.pairs_checked;
  out["states_explored"] = v.stats.states_explored;
  return out;
}

}  // namespace

PYBIND11_MODULE(rainbowverify, m) {
  m.doc() = "Rainbow connectivity toolkit: edge-colored graphs, CNF gadget "
            "instances, verifiers, and graph-class recognizers.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<Refusal>(m, "Refusal", PyExc_RuntimeError);

  py::class_<EdgeColoredGraph>(m, "Graph")
      .def_property_readonly("vertex_count", &EdgeColoredGraph::vertex_count)
      .def_property_readonly("edge_count", &EdgeColoredGraph::edge_count)
      .def_property_readonly("color_count", &EdgeColoredGraph::color_count)
      .def("vertices",
           [](const EdgeColoredGraph& g) {
             py::list out;
             for (Vertex v = 0; v < g.vertex_count(); ++v) out.append(g.vertex_name(v));
             return out;
           })
      .def("edges",
           [](const EdgeColoredGraph& g) {
             py::list out;
             for (const Edge& e : g.edges())
               out.append(py::make_tuple(g.vertex_name(e.u), g.vertex_name(e.v),
                                         g.color_name(e.color)));
             return out;
           })
      .def("__repr__", [](const EdgeColoredGraph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges, " + std::to_string(g.color_count()) +
               " colors>";
      });

  py::class_<CnfFormula>(m, "Formula")
      .def_property_readonly("variable_count",
                             [](const CnfFormula& f) { return f.variable_count; })
      .def_property_readonly("clause_count", &CnfFormula::clause_count)
      .def("clauses", [](const CnfFormula& f) {
        py::list out;
        for (const auto& clause : f.clauses) {
          py::list c;
          for (const Literal& l : clause) c.append(l.negative ? -l.variable : l.variable);
          out.append(c);
        }
        return out;
      });

  py::class_<Reduction>(m, "Reduction")
      .def_property_readonly("graph", [](const Reduction& r) { return r.graph; })
      .def_property_readonly("source",
                             [](const Reduction& r) { return r.graph.vertex_name(r.source); })
      .def_property_readonly("sink",
                             [](const Reduction& r) { return r.graph.vertex_name(r.sink); })
      .def_property_readonly("construction",
                             [](const Reduction& r) { return r.construction; })
      .def("document", [](const Reduction& r) { return reduction_document(r).dump(2); });

  m.def("load_graph", [](const std::string& text) { return load_graph_text(text).graph; },
        py::arg("json_text"));
  m.def("save_graph",
        [](const EdgeColoredGraph& g) { return save_graph(g).dump(2); });
  m.def("export_dot", [](const EdgeColoredGraph& g) { return export_dot(g); });
  m.def("diameter", [](const EdgeColoredGraph& g) { return diameter(g); });
  m.def("geodecity", [](const EdgeColoredGraph& g) { return geodecity(g); });

  m.def("count_shortest_paths",
        [](const EdgeColoredGraph& g, const std::string& u, const std::string& v) {
          return count_shortest_paths(g, g.vertex(u), g.vertex(v));
        },
        py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("shortest_paths",
        [](const EdgeColoredGraph& g, const std::string& u, const std::string& v,
           py::object cap) {
          std::optional<std::uint64_t> bound;
          if (!cap.is_none()) bound = cap.cast<std::uint64_t>();
          py::list out;
          for (const auto& w : enumerate_shortest_paths(g, g.vertex(u), g.vertex(v), bound))
            out.append(witness_obj(g, w));
          return out;
        },
        py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("cap") = py::none());

  m.def("parse_dimacs", &parse_dimacs, py::arg("text"));
  m.def("print_dimacs", &print_dimacs);
  m.def("pad_to_min_clauses", &pad_to_min_clauses, py::arg("formula"), py::arg("min_clauses"));
  m.def("brute_force_sat",
        [](const CnfFormula& f) -> py::object {
          auto a = brute_force_sat(f);
          if (!a) return py::none();
          py::list values;
          for (bool b : a->value) values.append(b);
          return values;
        },
        py::arg("formula"));

  m.def("build", &build_construction, py::arg("construction"), py::arg("formula"),
        py::arg("k") = 0,
        "Compile a formula: construction is base|io|ib|cubic|kreg (k needed for kreg).");

  m.def("rc_verify",
        [](const EdgeColoredGraph& g, const std::string& algo) {
          if (algo != "fpt" && algo != "brute") throw ParseError("algo must be fpt|brute");
          return verdict_dict(g, rc_verify(g, algo == "fpt" ? RcAlgo::Fpt : RcAlgo::Brute));
        },
        py::arg("graph"), py::arg("algo") = "fpt");
  m.def("src_verify",
        [](const EdgeColoredGraph& g, const std::string& algo, std::uint64_t kmax,
           py::object cap) {
          Verdict v;
          if (algo == "enum") {
            std::optional<std::uint64_t> bound;
            if (!cap.is_none()) bound = cap.cast<std::uint64_t>();
            v = src_verify_enumerate(g, bound);
          } else if (algo == "fpt") {
            v = src_verify_fpt(g);
          } else if (algo == "geodetic") {
            v = src_verify_geodetic(g);
          } else if (algo == "kgeo") {
            v = src_verify_kgeodetic(g, kmax);
          } else {
            throw ParseError("algo must be enum|fpt|geodetic|kgeo");
          }
          return verdict_dict(g, v);
        },
        py::arg("graph"), py::arg("algo") = "enum", py::arg("kmax") = 16,
        py::arg("cap") = py::none());

  m.def("rainbow_path",
        [](const EdgeColoredGraph& g, const std::string& u, const std::string& v) {
          return witness_obj(g, rainbow_path_between(g, g.vertex(u), g.vertex(v)));
        },
        py::arg("graph"), py::arg("u"), py::arg("v"));
  m.def("rainbow_shortest_path",
        [](const EdgeColoredGraph& g, const std::string& u, const std::string& v) {
          return witness_obj(g, rainbow_shortest_path_between(g, g.vertex(u), g.vertex(v)));
        },
        py::arg("graph"), py::arg("u"), py::arg("v"));

  m.def("is_bipartite", [](const EdgeColoredGraph& g) { return is_bipartite(g).bipartite; });
  m.def("is_chordal", [](const EdgeColoredGraph& g) { return is_chordal(g).chordal; });
  m.def("is_block_graph", [](const EdgeColoredGraph& g) { return is_block_graph(g).block_graph; });
  m.def("is_claw_free", [](const EdgeColoredGraph& g) { return is_claw_free(g).claw_free; });
  m.def("is_interval", [](const EdgeColoredGraph& g) {
    auto r = is_interval(g);
    return r.verdict == ScaledVerdict::Yes     ? py::object(py::bool_(true))
           : r.verdict == ScaledVerdict::No    ? py::object(py::bool_(false))
                                               : py::object(py::str("unknown-at-scale"));
  });
  m.def("is_outerplanar", [](const EdgeColoredGraph& g) {
    auto r = is_outerplanar(g);
    return r.verdict == ScaledVerdict::Yes     ? py::object(py::bool_(true))
           : r.verdict == ScaledVerdict::No    ? py::object(py::bool_(false))
                                               : py::object(py::str("unknown-at-scale"));
  });
  m.def("regularity", [](const EdgeColoredGraph& g) -> py::object {
    auto r = regularity(g);
    if (r.regular) return py::int_(r.degree);
    return py::none();
  });
  m.def("max_clique_size", [](const EdgeColoredGraph& g) { return max_clique_size_chordal(g); });
}
