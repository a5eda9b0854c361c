// Copyright 2026 The extremal-graphs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "extremal/analytics.hpp"
#include "extremal/baselines.hpp"
#include "extremal/error.hpp"
#include "extremal/experiments.hpp"
#include "extremal/extremal_model.hpp"
#include "extremal/graph.hpp"
#include "extremal/io.hpp"

namespace py = pybind11;
using namespace extremal;

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> table_rows(const DegreeTable& t) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  rows.reserve(t.size());
  for (const auto& r : t) rows.emplace_back(r.degree, r.count);
  return rows;
}

Graph graph_from_edges(std::uint64_t n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).finalize();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Extremal scale-free graphs: construction and verification";

  static py::exception<Error> error(m, "ExtremalError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             auto adj = g.neighbors(v);
             return std::vector<VertexId>(adj.begin(), adj.end());
           },
           py::arg("v"))
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) +
               " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<ClassifiedGraph>(m, "ClassifiedGraph")
      .def_property_readonly("graph", &ClassifiedGraph::graph)
      .def_property_readonly("t", &ClassifiedGraph::t)
      .def("vertex_class",
           [](const ClassifiedGraph& g, VertexId v) { return to_string(g.address_of(v).cls); })
      .def("address",
           [](const ClassifiedGraph& g, VertexId v) { return to_string(g.address_of(v)); });

  m.def("order_formula", &order_formula, py::arg("t"));
  m.def("size_formula", &size_formula, py::arg("t"));
  m.def("closed_form_degree_table",
        [](unsigned t) { return table_rows(closed_form_degree_table(t)); }, py::arg("t"));
  m.def("build_direct", &build_direct, py::arg("t"));
  m.def("build_recursive", [](unsigned t) { return build_recursive(t); }, py::arg("t"));
  m.def("class_census_ok", [](const ClassifiedGraph& g) { return class_census(g).ok(); });

  m.def("is_connected", &is_connected);
  m.def("is_complete", &is_complete);
  m.def("degree_histogram", [](const Graph& g) { return table_rows(degree_histogram(g)); });
  m.def("cumulative_distribution", [](const Graph& g) {
    std::vector<std::pair<std::uint64_t, double>> pts;
    for (const auto& p : cumulative_distribution(g).points) pts.emplace_back(p.degree, p.p);
    return pts;
  });

  py::class_<GammaFit>(m, "GammaFit")
      .def_readonly("gamma_alpha", &GammaFit::gamma_alpha)
      .def_readonly("gamma", &GammaFit::gamma)
      .def_readonly("r_squared", &GammaFit::r_squared)
      .def_property_readonly("k_range", [](const GammaFit& f) {
        return std::make_pair(f.k_range.k_lo, f.k_range.k_hi);
      });
  m.def("fit_gamma",
        [](const Graph& g, std::uint64_t k_lo, std::uint64_t k_hi) {
          return fit_gamma(cumulative_distribution(g), k_lo, k_hi);
        },
        py::arg("graph"), py::arg("k_lo"), py::arg("k_hi"));
  m.def("extremal_fit_window", [](unsigned t) {
    const FitWindow w = extremal_fit_window(t);
    return std::make_pair(w.k_lo, w.k_hi);
  });

  m.def("exact_diameter",
        [](const Graph& g, std::uint64_t budget) {
          DiameterResult d;
          {
            py::gil_scoped_release release;
            d = exact_diameter(g, {budget, 0});
          }
          return py::make_tuple(d.diameter, py::make_tuple(d.witness.first, d.witness.second));
        },
        py::arg("graph"), py::arg("vertex_budget") = kDefaultExactBudget);
  m.def("fast_diameter_bounds", [](const Graph& g) {
    const DiameterBounds b = fast_diameter_bounds(g);
    return std::make_pair(b.lower, b.upper);
  });

  py::class_<TheoremVerdict>(m, "TheoremVerdict")
      .def_readonly("is_complete", &TheoremVerdict::is_complete)
      .def_readonly("diameter", &TheoremVerdict::diameter)
      .def_readonly("scale_free_plausible", &TheoremVerdict::scale_free_plausible)
      .def_readonly("extremal_bound_met", &TheoremVerdict::extremal_bound_met);
  m.def("theorem_check", [](const Graph& g) { return theorem_check(g); });

  m.def("generate_ba",
        [](std::uint64_t n, std::uint64_t m_edges, std::uint64_t seed) {
          return generate_ba({n, m_edges, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("seed"));

  m.def("edge_list",
        [](const Graph& g, const Metadata& meta) { return edge_list_string(g, meta); },
        py::arg("graph"), py::arg("metadata") = Metadata{});
  m.def("parse_edge_list", [](const std::string& text) {
    EdgeListFile f = parse_edge_list(text);
    return py::make_tuple(std::move(f.graph), f.metadata);
  });
  m.def("extremal_metadata", &extremal_metadata);
  m.def("analysis_report_json",
        [](const Graph& g, const Metadata& meta) { return report_json(analyze(g, meta)); },
        py::arg("graph"), py::arg("metadata") = Metadata{});
  m.def("dot", &dot_string, py::arg("t"));
}
