#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftspare/autgroup.hpp"
#include "ftspare/errors.hpp"
#include "ftspare/fault.hpp"
#include "ftspare/graph.hpp"
#include "ftspare/perm_group.hpp"
#include "ftspare/subiso.hpp"
#include "ftspare/theorem_lab.hpp"

namespace py = pybind11;
using namespace ftspare;

namespace {

// Exact group orders can exceed 64 bits; hand them to Python as ints built
// from the decimal string.
py::object bignum_to_int(const Bignum &b) {
  return py::module_::import("builtins").attr("int")(b.str());
}

py::object opt_bool(const std::optional<bool> &v) {
  if (!v) return py::none();
  return py::bool_(*v);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fault-tolerant supergraph analysis";

  // base first: translators run newest-first, so the specific ones below
  // must be registered after the catch-all
  py::register_exception<Error>(m, "FtspareError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidEdge>(m, "InvalidEdge", PyExc_ValueError);
  py::register_exception<InvalidVertex>(m, "InvalidVertex", PyExc_ValueError);
  py::register_exception<DegreeMismatch>(m, "DegreeMismatch", PyExc_ValueError);

  py::class_<VertexSet>(m, "VertexSet")
      .def(py::init<std::vector<unsigned>>())
      .def_property_readonly("members", &VertexSet::members)
      .def("__len__", &VertexSet::size)
      .def("__contains__", &VertexSet::contains)
      .def(py::self == py::self)
      .def("__repr__", [](const VertexSet &s) {
        std::string r = "VertexSet([";
        for (std::size_t i = 0; i < s.members().size(); ++i)
          r += (i ? ", " : "") + std::to_string(s.members()[i]);
        return r + "])";
      });
  py::implicitly_convertible<std::vector<unsigned>, VertexSet>();

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("edges", [](const Graph &g) { return g.edges(); })
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("edge_count", &Graph::edge_count)
      .def("is_complete", &Graph::is_complete)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph &g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) +
               ")";
      });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<unsigned>>())
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("images", &Permutation::images)
      .def_property_readonly("degree", &Permutation::degree)
      .def("__call__", [](const Permutation &p, unsigned v) { return apply(p, v); })
      .def("is_identity", &Permutation::is_identity)
      .def(py::self == py::self)
      .def("__repr__", [](const Permutation &p) { return "Permutation(" + format_cycles(p) + ")"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init<unsigned, std::vector<Permutation>>(), py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators", &PermGroup::generators)
      .def("order", [](const PermGroup &g) { return bignum_to_int(g.order()); })
      .def("contains", &PermGroup::contains)
      .def("base", &PermGroup::base)
      .def_static("trivial", &PermGroup::trivial)
      .def_static("symmetric", &PermGroup::symmetric)
      .def_static("cyclic", &PermGroup::cyclic)
      .def_static("dihedral", &PermGroup::dihedral);

  py::class_<AutomorphismGroupResult>(m, "AutomorphismGroupResult")
      .def_readonly("group", &AutomorphismGroupResult::group)
      .def_property_readonly("order",
                             [](const AutomorphismGroupResult &r) { return bignum_to_int(r.order); })
      .def_readonly("vertex_transitive", &AutomorphismGroupResult::vertex_transitive)
      .def_property_readonly("homogeneity", [](const AutomorphismGroupResult &r) {
        py::list out;
        for (const auto &h : r.homogeneity) out.append(opt_bool(h));
        return out;
      });

  py::class_<Embedding>(m, "Embedding")
      .def_readonly("map", &Embedding::map)
      .def("__repr__", [](const Embedding &e) {
        std::string r = "Embedding([";
        for (std::size_t i = 0; i < e.map.size(); ++i) r += (i ? ", " : "") + std::to_string(e.map[i]);
        return r + "])";
      });

  py::class_<RealizationCheck>(m, "RealizationCheck")
      .def_readonly("basic", &RealizationCheck::basic)
      .def_readonly("host", &RealizationCheck::host)
      .def_readonly("k", &RealizationCheck::k)
      .def_readonly("verdict", &RealizationCheck::verdict)
      .def_readonly("counterexample", &RealizationCheck::counterexample)
      .def_readonly("checked_subsets", &RealizationCheck::checked_subsets);

  py::class_<ReconfigPlan>(m, "ReconfigPlan")
      .def_readonly("host", &ReconfigPlan::host)
      .def_readonly("spares", &ReconfigPlan::spares)
      .def_readonly("faults", &ReconfigPlan::faults)
      .def_readonly("automorphism", &ReconfigPlan::automorphism)
      .def_readonly("relabel", &ReconfigPlan::relabel);

  py::class_<SpectrumEntry>(m, "SpectrumEntry")
      .def_readonly("k", &SpectrumEntry::k)
      .def_property_readonly("homogeneous",
                             [](const SpectrumEntry &e) { return opt_bool(e.homogeneous); })
      .def_property_readonly("supports_reconfiguration", [](const SpectrumEntry &e) {
        return opt_bool(e.supports_reconfiguration);
      });

  py::class_<Counterexample>(m, "Counterexample")
      .def_readonly("instance", &Counterexample::instance)
      .def_readonly("detail", &Counterexample::detail);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("suite", &VerificationReport::suite)
      .def_readonly("instances_checked", &VerificationReport::instances_checked)
      .def_readonly("counterexamples", &VerificationReport::counterexamples)
      .def_readonly("boundary_witnesses", &VerificationReport::boundary_witnesses)
      .def_readonly("parameters", &VerificationReport::parameters)
      .def("ok", &VerificationReport::ok)
      .def_property_readonly("elapsed_seconds",
                             [](const VerificationReport &r) { return r.elapsed.count(); });

  py::enum_<SparePolicy>(m, "SparePolicy")
      .value("universal", SparePolicy::universal)
      .value("universal_clique", SparePolicy::universal_clique);

  py::enum_<OrbitDecomposition::Universe>(m, "Universe")
      .value("points", OrbitDecomposition::Universe::points)
      .value("subsets", OrbitDecomposition::Universe::subsets)
      .value("tuples", OrbitDecomposition::Universe::tuples);

  // graph construction and I/O
  m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
  m.def("complete_graph", &complete_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("hypercube", &hypercube);
  m.def("complement", &complement);
  m.def(
      "delete_vertices",
      [](const Graph &g, const VertexSet &w) {
        auto r = delete_vertices(g, w);
        return py::make_tuple(r.graph, r.old_to_new);
      },
      "returns (graph, old_to_new) where deleted vertices map to -1");
  m.def("induced_subgraph", &induced_subgraph);
  m.def("degree_sequence", &degree_sequence);
  m.def("parse_graph6", [](const std::string &s) { return parse_graph6(s); });
  m.def("emit_graph6", &emit_graph6);
  m.def("parse_edge_list", [](const std::string &s) { return parse_edge_list(s); });
  m.def("emit_edge_list", &emit_edge_list);

  // permutations and groups
  m.def("parse_cycles", [](const std::string &s, unsigned d) { return parse_cycles(s, d); },
        py::arg("text"), py::arg("degree"));
  m.def("format_cycles", &format_cycles);
  m.def("compose", &compose);
  m.def("inverse", &inverse);
  m.def("apply", &apply);
  m.def("parse_generator_file", [](const std::string &s) { return parse_generator_file(s); });
  m.def("emit_generator_file", &emit_generator_file);
  m.def("orbit_of_point", &orbit_of_point);
  m.def("orbit_of_subset", &orbit_of_subset, py::arg("group"), py::arg("subset"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def("orbit_of_tuple", &orbit_of_tuple, py::arg("group"), py::arg("tuple"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def("count_orbits_on_ksubsets", &count_orbits_on_ksubsets, py::arg("group"), py::arg("k"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def("count_orbits_on_ktuples", &count_orbits_on_ktuples, py::arg("group"), py::arg("k"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def("is_k_homogeneous", &is_k_homogeneous, py::arg("group"), py::arg("k"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def("is_k_transitive", &is_k_transitive, py::arg("group"), py::arg("k"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def(
      "orbit_count_monotonicity_check",
      [](const PermGroup &g, unsigned mm, unsigned k, std::uint64_t cap) {
        auto r = orbit_count_monotonicity_check(g, mm, k, cap);
        return py::make_tuple(r.orbits_m, r.orbits_k, r.holds);
      },
      py::arg("group"), py::arg("m"), py::arg("k"), py::arg("cap") = kDefaultUniverseCap,
      "returns (orbits_m, orbits_k, holds)");

  // automorphisms, containment, fault tolerance
  m.def("automorphism_group", &automorphism_group, py::arg("graph"),
        py::arg("cap") = kDefaultUniverseCap);
  m.def("is_automorphism", &is_automorphism);
  m.def("max_homogeneity", &max_homogeneity, py::arg("graph"), py::arg("cap") = kDefaultUniverseCap);
  m.def("contains_subgraph", &contains_subgraph);
  m.def("contains_subgraph_after_faults", &contains_subgraph_after_faults);
  m.def("check_embedding", &check_embedding);
  m.def("is_k_fault_tolerant_realization", &is_k_fault_tolerant_realization, py::arg("host"),
        py::arg("basic"), py::arg("k"), py::arg("relaxed") = false, py::arg("threads") = 1);
  m.def("build_global_sparing", &build_global_sparing, py::arg("basic"), py::arg("k"),
        py::arg("policy") = SparePolicy::universal);
  m.def("find_reconfiguration",
        py::overload_cast<const Graph &, const VertexSet &, const VertexSet &>(&find_reconfiguration));
  m.def("homogeneity_spectrum_report", &homogeneity_spectrum_report, py::arg("host"),
        py::arg("cap") = kDefaultUniverseCap);

  // verification suites
  m.def("enumerate_labeled_graphs", [](unsigned n) {
    LabeledGraphStream stream(n);
    std::vector<Graph> out;
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
  });
  m.def("verify_theorem_3subsets", &verify_theorem_3subsets, py::arg("n_min") = 5,
        py::arg("n_max") = 6, py::arg("threads") = 1);
  m.def("verify_main_theorem", &verify_main_theorem, py::arg("n_max") = 6, py::arg("threads") = 1);
  m.def("verify_lemma_s7", &verify_lemma_s7);
  m.def("verify_q3_example", &verify_q3_example);
  m.def("verify_group_lemmas", py::overload_cast<>(&verify_group_lemmas));
  m.def("corollary_checks", &corollary_checks, py::arg("n_max") = 6, py::arg("threads") = 1);

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
