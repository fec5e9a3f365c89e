#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkcount/asymptotics.hpp"
#include "walkcount/search.hpp"
#include "walkcount/simulate.hpp"
#include "walkcount/surgery.hpp"
#include "walkcount/verify.hpp"

namespace py = pybind11;
namespace wc = walkcount;

namespace {

py::dict profile_to_dict(const wc::NProfile& prof) {
  py::list values, lefts, rights, midpoints, symbolic;
  for (const auto& b : prof.breakpoints) {
    values.append(b.time.value);
    lefts.append(b.left);
    rights.append(b.right);
    midpoints.append(b.midpoint());
    symbolic.append(wc::tv_to_string(b.time));
  }
  py::dict d;
  d["horizon"] = prof.horizon;
  d["value"] = values;
  d["left"] = lefts;
  d["right"] = rights;
  d["midpoint"] = midpoints;
  d["symbolic_time"] = symbolic;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Endpoint-counting dynamics on metric graphs: N(T) simulation, growth "
      "coefficients, tree surgery, and minimal-growth searches.";

  py::register_exception<wc::Error>(m, "WalkcountError");

  py::class_<wc::MetricGraph>(m, "MetricGraph")
      .def_static("from_json", &wc::graph_from_json, py::arg("text"))
      .def("to_json", &wc::graph_to_json)
      .def_property_readonly("num_vertices",
                             [](const wc::MetricGraph& g) { return g.num_vertices; })
      .def_property_readonly("num_edges", &wc::MetricGraph::num_edges)
      .def_property_readonly("source",
                             [](const wc::MetricGraph& g) { return g.source; })
      .def_property_readonly("lengths", [](const wc::MetricGraph& g) {
        std::vector<double> out;
        for (const auto& s : g.lengths) out.push_back(s.value);
        return out;
      });

  py::class_<wc::RootedTreeView>(m, "RootedTree")
      .def(py::init([](const wc::MetricGraph& g, int root) {
             return wc::RootedTreeView(g, root);
           }),
           py::arg("graph"), py::arg("root"))
      .def_static("from_parents",
                  [](const std::vector<int>& parents,
                     const std::vector<double>& lengths) {
                    return wc::RootedTreeView::from_parents(
                        parents, wc::make_symbols(lengths));
                  },
                  py::arg("parents"), py::arg("lengths"))
      .def_property_readonly("graph", &wc::RootedTreeView::graph)
      .def_property_readonly("num_edges", &wc::RootedTreeView::num_edges)
      .def_property_readonly("root_degree", &wc::RootedTreeView::root_degree)
      .def("parent", &wc::RootedTreeView::parent, py::arg("edge"))
      .def("depth", &wc::RootedTreeView::depth, py::arg("edge"))
      .def("parent_vector", &wc::RootedTreeView::parent_vector)
      .def("hanging_edges", &wc::RootedTreeView::hanging_edges)
      .def("up_chain", &wc::RootedTreeView::up_chain, py::arg("edge"))
      .def("branch", &wc::RootedTreeView::branch, py::arg("edge"))
      .def("is_chain", &wc::RootedTreeView::is_chain)
      .def("is_star_of_chains", &wc::RootedTreeView::is_star_of_chains)
      .def("chain_partition", &wc::RootedTreeView::chain_partition);

  m.def("validate", &wc::validate, py::arg("graph"));
  m.def("degree", &wc::degree, py::arg("graph"), py::arg("vertex"));
  m.def(
      "make_chain",
      [](const std::vector<double>& lengths, int root_position) {
        return wc::make_chain(wc::make_symbols(lengths), root_position);
      },
      py::arg("lengths"), py::arg("root_position") = 0);
  m.def(
      "make_star_of_chains",
      [](const std::vector<int>& partition, const std::vector<double>& lengths) {
        return wc::make_star_of_chains(partition, wc::make_symbols(lengths));
      },
      py::arg("partition"), py::arg("lengths"));
  m.def(
      "make_complete",
      [](int m_, const std::vector<double>& lengths) {
        return wc::make_complete(m_, wc::make_symbols(lengths));
      },
      py::arg("m"), py::arg("lengths"));

  m.def(
      "n_profile",
      [](const wc::MetricGraph& g, int source, double horizon,
         std::int64_t budget) {
        return profile_to_dict(wc::n_profile(g, source, horizon, budget));
      },
      py::arg("graph"), py::arg("source"), py::arg("horizon"),
      py::arg("budget") = wc::kDefaultEventBudget);
  m.def("brute_force_points", &wc::brute_force_points, py::arg("graph"),
        py::arg("source"), py::arg("T"),
        py::arg("budget") = wc::kDefaultEventBudget);

  m.def("n1_coefficient", &wc::n1_coefficient, py::arg("graph"));
  m.def("p2", &wc::p2, py::arg("tree"));
  m.def("n2_coefficient", &wc::n2_coefficient, py::arg("tree"));
  m.def("split_s_t", &wc::split_s_t, py::arg("tree"));
  m.def("partition_objective", &wc::partition_objective, py::arg("partition"),
        py::arg("total_edges"));

  m.def(
      "minimize_by_surgery",
      [](const wc::RootedTreeView& tree) {
        std::vector<wc::SurgeryStep> log;
        wc::RootedTreeView out = wc::minimize_by_surgery(tree, &log);
        py::list steps;
        for (const auto& s : log) {
          py::dict d;
          d["kind"] = s.kind;
          d["e"] = s.e;
          d["b"] = s.b;
          d["d"] = s.d;
          d["delta_p2"] = s.delta_p2;
          steps.append(d);
        }
        return py::make_tuple(out, steps);
      },
      py::arg("tree"));
  m.def(
      "t1_apply",
      [](const wc::RootedTreeView& t, int e, int b) {
        return wc::t1_apply(t, {e, b});
      },
      py::arg("tree"), py::arg("e"), py::arg("b"));
  m.def(
      "t1_delta",
      [](const wc::RootedTreeView& t, int e, int b) {
        return wc::t1_delta(t, {e, b});
      },
      py::arg("tree"), py::arg("e"), py::arg("b"));
  m.def(
      "t2_apply",
      [](const wc::RootedTreeView& t, int b, int d) {
        return wc::t2_apply(t, {b, d});
      },
      py::arg("tree"), py::arg("b"), py::arg("d"));
  m.def(
      "t2_delta",
      [](const wc::RootedTreeView& t, int b, int d) {
        return wc::t2_delta(t, {b, d});
      },
      py::arg("tree"), py::arg("b"), py::arg("d"));

  m.def(
      "best_tree",
      [](const std::vector<double>& lengths) {
        wc::SearchResult res = wc::best_tree(wc::make_symbols(lengths));
        py::dict d;
        d["best"] = res.best;
        d["best_p2"] = res.best_p2;
        d["is_chain"] = res.best.is_chain();
        d["num_ties"] = res.ties.size();
        return d;
      },
      py::arg("lengths"));
  m.def(
      "best_partition",
      [](int total_edges) { return wc::best_partition(total_edges).parts; },
      py::arg("total_edges"));
  m.def("root_degree_growth_scan", &wc::root_degree_growth_scan,
        py::arg("d_max"), py::arg("scan_bound") = 200);

  m.def(
      "run_acceptance",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : wc::run_acceptance(seed))
          out.append(py::make_tuple(r.name, r.pass, r.detail));
        return out;
      },
      py::arg("seed") = 20240817ull);
}
