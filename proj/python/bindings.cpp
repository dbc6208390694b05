#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polylab/polylab.hpp"

namespace py = pybind11;
using namespace polylab;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

DistanceMultiset multiset(const std::vector<int>& s) { return DistanceMultiset(s); }

py::dict spectrum_dict(const SpectrumReport& r) {
  py::dict d;
  py::list groups;
  for (const auto& g : r.eigenvalues) groups.append(py::make_tuple(g.value, g.mult));
  d["n"] = r.n;
  d["d"] = r.d;
  d["eigenvalues"] = groups;
  d["lambda2"] = r.lambda2;
  d["lambda_min"] = r.lambda_min;
  d["lambda_abs"] = r.lambda_abs;
  d["normalized_gap"] = r.normalized_gap;
  d["complete"] = r.complete;
  return d;
}

}  // namespace

PYBIND11_MODULE(polylab, m) {
  m.doc() = "Polygraphs of regular graphs: construction, spectra and local expansion";

  static py::exception<Error> error(m, "PolylabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<RegularGraph>(m, "RegularGraph")
      .def(py::init([](Vertex n, const std::vector<Edge>& edges) { return RegularGraph::from_edge_list(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &RegularGraph::num_vertices)
      .def_property_readonly("num_edges", &RegularGraph::num_edges)
      .def_property_readonly("degree", [](const RegularGraph& g) { return g.degree(); })
      .def("edges", &RegularGraph::edges)
      .def("neighbors", [](const RegularGraph& g, Vertex v) {
        require(v >= 0 && v < g.num_vertices(), ErrorCode::kIndexOutOfRange, "vertex out of range");
        const auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("has_edge", &RegularGraph::has_edge)
      .def("to_edge_list", [](const RegularGraph& g) { return to_edge_list(g); })
      .def("__repr__", [](const RegularGraph& g) {
        return "<RegularGraph n=" + std::to_string(g.num_vertices()) + " d=" + std::to_string(g.degree()) + ">";
      });

  m.def("petersen", &petersen);
  m.def("icosahedron", &icosahedron);
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("torus_triangulation", &torus_triangulation, py::arg("m"), py::arg("n"));
  m.def("tensor_product", &tensor_product);
  m.def("distance_two_of_incidence", [](const RegularGraph& g) { return distance_two_graph(incidence_graph(g)); });
  m.def(
      "random_regular",
      [](Vertex n, Vertex d, int girth_min, std::uint64_t seed, int max_tries) {
        RandomRegularOptions o;
        o.n = n;
        o.d = d;
        o.girth_min = girth_min;
        o.seed = seed;
        o.max_tries = max_tries;
        return random_regular_high_girth(o);
      },
      py::arg("n"), py::arg("d"), py::arg("girth_min") = 3, py::arg("seed") = 0, py::arg("max_tries") = 100);
  m.def("parse_edge_list", &parse_edge_list);
  m.def("load_edge_list", &load_edge_list);

  m.def("girth", [](const RegularGraph& g) { return girth(g); });
  m.def("is_connected", [](const RegularGraph& g) { return is_connected(g); });
  m.def("is_bipartite", [](const RegularGraph& g) { return is_bipartite(g); });
  m.def("common_neighbor_count", [](const RegularGraph& g) { return common_neighbor_count(g); });
  m.def("count_triangles", [](const RegularGraph& g) { return count_triangles(g); });
  m.def(
      "spectrum", [](const RegularGraph& g, bool iterative) {
        return spectrum_dict(spectrum(g, {.allow_iterative = iterative}));
      },
      py::arg("graph"), py::arg("allow_iterative") = false);

  m.def("a_S", [](const std::vector<int>& s, int d) { return to_py(a_S(multiset(s), d)); });
  m.def("b_S", [](const std::vector<int>& s, int d) { return to_py(b_S(multiset(s), d)); });
  m.def(
      "polygraph",
      [](const RegularGraph& base, const std::vector<int>& s, bool allow_unsafe_girth) {
        PolygraphOptions opt;
        opt.allow_unsafe_girth = allow_unsafe_girth;
        return build_polygraph(base, multiset(s), opt).graph();
      },
      py::arg("base"), py::arg("S"), py::arg("allow_unsafe_girth") = false);
  m.def("spectrum_by_formula", [](const RegularGraph& base, const std::vector<int>& s) {
    return spectrum_dict(polygraph_spectrum_by_formula(base, multiset(s)));
  });
  m.def(
      "link",
      [](const std::vector<int>& s, int d, bool with_spectrum) {
        LinkOptions opt;
        opt.compute_spectrum = with_spectrum;
        const auto r = build_link_via_tree(multiset(s), d, opt);
        py::dict out;
        out["a_S"] = to_py(r.a_S);
        out["b_S"] = to_py(r.b_S);
        out["components"] = r.components;
        out["connected"] = r.connected;
        out["diameter"] = r.diameter;
        out["spectrum"] = r.spectrum ? py::object(spectrum_dict(*r.spectrum)) : py::none();
        out["graph"] = r.graph;
        return out;
      },
      py::arg("S"), py::arg("d"), py::arg("spectrum") = true);
  m.def("link_connected", [](const std::vector<int>& s) {
    const auto ms = multiset(s);
    require(ms.m() == 2 || ms.m() == 3, ErrorCode::kInvalidArgument, "closed forms exist for m = 2, 3");
    const auto& e = ms.entries();
    return ms.m() == 2 ? link_connected_m2(e[0], e[1]) : link_connected_m3(e[0], e[1], e[2]);
  });

  m.def("abtb", &abtb_value, py::arg("a"), py::arg("b"));
  m.def("catalan_census", [](std::int64_t a, std::int64_t b, int t) { return to_py(catalan_walk_census(a, b, t)); });
  m.def("entropy_argmax", [](std::int64_t a, std::int64_t b) {
    const auto r = entropy_argmax(a, b);
    return py::make_tuple(r.argmax, r.value);
  });
  m.def("tradeoff_table", [] {
    const auto t = tradeoff_table();
    std::vector<std::vector<double>> rows;
    for (const auto& row : t) rows.emplace_back(row.begin(), row.end());
    return rows;
  });
  m.def("tradeoff_epsilon", [](std::int64_t a, std::int64_t b, double delta) {
    const auto e = tradeoff_epsilon(a, b, delta);
    return py::dict(py::arg("r") = e.r, py::arg("beta") = e.beta, py::arg("epsilon") = e.epsilon);
  });
  m.def(
      "overlap_fraction",
      [](double n, int d, double lambda) {
        OverlapInputs in;
        in.n = n;
        in.d = d;
        in.lambda = lambda;
        return overlap_bound_calculator(in).fraction;
      },
      py::arg("n") = 1000.0, py::arg("d") = 1600, py::arg("lam") = 80.0);
}
