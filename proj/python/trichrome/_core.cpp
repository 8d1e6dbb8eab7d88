#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trichrome/canonical.hpp"
#include "trichrome/coloring.hpp"
#include "trichrome/constructions.hpp"
#include "trichrome/enumeration.hpp"
#include "trichrome/graph6.hpp"
#include "trichrome/verify.hpp"

namespace py = pybind11;
using namespace trichrome;

namespace {

py::dict report_dict(const InvariantReport& rep) {
    py::dict witnesses;
    witnesses["chi"] = rep.chi_witness.colors;
    witnesses["gamma"] = rep.gamma_witness.colors;
    witnesses["psi"] = rep.psi_witness.colors;
    py::dict d;
    d["n"] = rep.n;
    d["m"] = rep.m;
    d["omega"] = rep.omega;
    d["chi"] = rep.chi;
    d["gamma"] = rep.gamma;
    d["psi"] = rep.psi;
    d["witnesses"] = witnesses;
    return d;
}

VertexSet set_from_list(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
        s.add(v);
    }
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact coloring invariants, extremal constructions, exhaustive verification";

    m.def("analyze", [](const std::string& g6) { return report_dict(analyze(parse_graph6(g6))); },
          py::arg("graph6"), "Invariants and witnesses of a graph6-encoded graph.");

    m.def("is_realizable", [](int f, int g, int h) { return is_realizable({f, g, h}); },
          py::arg("f"), py::arg("g"), py::arg("h"));

    m.def("min_order",
          [](int f, int g, int h) { return min_order({f, g, h}); },
          py::arg("f"), py::arg("g"), py::arg("h"),
          "Minimum order of a connected graph with the given invariants.");

    m.def("realize", [](int f, int g, int h) { return write_graph6(realize({f, g, h})); },
          py::arg("f"), py::arg("g"), py::arg("h"),
          "graph6 string of a minimum-order graph attaining the triple.");

    m.def("basic_bipartite", [](int k) { return write_graph6(basic_bipartite(k)); }, py::arg("k"));
    m.def("g_star", [](int g, int h) { return write_graph6(g_star(g, h)); }, py::arg("g"),
          py::arg("h"));
    m.def("reduced_graph", [](int t) { return write_graph6(reduced_graph(t)); }, py::arg("t"));
    m.def("extended_graph", [](int ell) { return write_graph6(extended_graph(ell)); },
          py::arg("ell"));
    m.def("l_graph", [](int h, int variant) { return write_graph6(l_graph(h, variant)); },
          py::arg("h"), py::arg("variant"));

    m.def("count_connected",
          [](int n, int threads) {
              return for_each_connected_graph(n, threads, [](const Graph&, const CanonicalForm&) {});
          },
          py::arg("n"), py::arg("threads") = 0,
          "Number of isomorphism classes of connected graphs on n vertices.");

    m.def("connected_graphs",
          [](int n, int threads) {
              std::vector<std::string> out;
              for (const Graph& g : connected_graphs(n, threads)) out.push_back(write_graph6(g));
              return out;
          },
          py::arg("n"), py::arg("threads") = 0);

    m.def("verify_min_order",
          [](int f, int g, int h, int threads) {
              const MinOrderVerification v = verify_min_order({f, g, h}, threads);
              py::list realizers;
              for (const Graph& r : v.realizers) realizers.append(write_graph6(r));
              py::dict d;
              d["formula"] = v.formula;
              d["search_min"] = v.search_min;
              d["agrees"] = v.agrees();
              d["realizers"] = realizers;
              return d;
          },
          py::arg("f"), py::arg("g"), py::arg("h"), py::arg("threads") = 0,
          "Exhaustively search small orders and compare against the formula.");

    m.def("certify",
          [](const std::string& g6, const std::vector<int>& h_set, const std::vector<int>& s_set,
             int k) {
              GrundyCertificate cert{set_from_list(h_set), set_from_list(s_set), k};
              const CertificateCheck result = check_certificate(parse_graph6(g6), cert);
              py::dict d;
              d["ok"] = result.ok;
              d["reason"] = result.ok ? py::object(py::none()) : py::object(py::str(result.reason));
              d["implied_lower_bound"] =
                  result.ok ? py::object(py::int_(result.implied_lower_bound))
                            : py::object(py::none());
              return d;
          },
          py::arg("graph6"), py::arg("h_set"), py::arg("s_set"), py::arg("k"),
          "Check a Grundy lower-bound certificate (vertices are 0-based).");
}
