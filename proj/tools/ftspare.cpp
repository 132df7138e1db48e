// ftspare command-line front end: graph symmetry analysis, fault-tolerant
// realization checks, reconfiguration search, sparing construction, and the
// exhaustive verification suites.
//
// Exit codes: 0 success / verdict true, 1 verdict false or counterexample
// found, 2 usage or input errors. stdout is deterministic; timings go to
// stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftspare/autgroup.hpp"
#include "ftspare/errors.hpp"
#include "ftspare/fault.hpp"
#include "ftspare/graph.hpp"
#include "ftspare/parallel.hpp"
#include "ftspare/perm_group.hpp"
#include "ftspare/subiso.hpp"
#include "ftspare/theorem_lab.hpp"

namespace {

using ftspare::Graph;
using ftspare::VertexSet;
using json = nlohmann::ordered_json;

constexpr const char *kSchemaVersion = "ftspare-report/v1";

// ------------------------------------------------------------ graph input

std::optional<Graph> named_graph(const std::string &name) {
  auto family = [&](char prefix) -> std::optional<unsigned> {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return static_cast<unsigned>(std::stoul(name.substr(1)));
  };
  if (auto n = family('K')) return ftspare::complete_graph(*n);
  if (auto n = family('C')) return ftspare::cycle_graph(*n);
  if (auto n = family('P')) return ftspare::path_graph(*n);
  if (auto n = family('Q')) return ftspare::hypercube(*n);
  // BASE+<k>spares, e.g. Q3+2spares: universal global sparing on a builtin
  auto plus = name.find('+');
  if (plus != std::string::npos && name.size() > plus + 7 &&
      name.substr(name.size() - 6) == "spares") {
    std::string count = name.substr(plus + 1, name.size() - 6 - plus - 1);
    if (!count.empty() &&
        std::all_of(count.begin(), count.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      if (auto base = named_graph(name.substr(0, plus)))
        return ftspare::build_global_sparing(*base, static_cast<unsigned>(std::stoul(count)),
                                             ftspare::SparePolicy::universal);
    }
  }
  return std::nullopt;
}

Graph load_graph(const std::string &spec) {
  if (auto g = named_graph(spec)) return *g;
  std::ifstream in(spec, std::ios::binary);
  if (!in)
    throw ftspare::ParseError("cannot read graph '" + spec +
                              "' (not a file, and not a named graph like K5, C6, Q3, Q3+2spares)");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ftspare::ParseError("empty graph file: " + spec);
  // edge-list files start with the numeric "n m" header; graph6 bytes are >= 63
  if (std::isdigit(static_cast<unsigned char>(text[first])))
    return ftspare::parse_edge_list(text);
  return ftspare::parse_graph6(text);
}

VertexSet parse_vertex_list(const std::string &text) {
  std::vector<unsigned> vs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      vs.push_back(static_cast<unsigned>(std::stoul(item)));
    } catch (...) {
      throw ftspare::ParseError("bad vertex index '" + item + "' in list '" + text + "'");
    }
  }
  return VertexSet(std::move(vs));
}

// ------------------------------------------------------------ reporting

void emit(const json &doc, bool as_json, const std::string &human) {
  if (as_json)
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << human;
}

std::string tri_state(const std::optional<bool> &v) {
  return v ? (*v ? "yes" : "no") : "unknown";
}

// ------------------------------------------------------------ subcommands

int run_analyze(const std::string &spec, bool as_json) {
  Graph g = load_graph(spec);
  auto aut = ftspare::automorphism_group(g);

  unsigned max_hom = 0;
  for (unsigned k = 1; k <= g.order(); ++k) {
    if (!aut.homogeneity[k].has_value() || !*aut.homogeneity[k]) break;
    max_hom = k;
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "analyze";
  doc["source"] = spec;
  doc["n"] = g.order();
  doc["m"] = g.edge_count();
  doc["graph6"] = ftspare::emit_graph6(g);
  doc["degrees"] = ftspare::degree_sequence(g);
  doc["aut_order"] = aut.order.str();
  json gens = json::array();
  for (const auto &p : aut.group.generators()) gens.push_back(ftspare::format_cycles(p));
  doc["aut_generators"] = gens;
  doc["vertex_transitive"] = aut.vertex_transitive;
  json spectrum = json::array();
  for (unsigned k = 0; k <= g.order(); ++k) {
    json row;
    row["k"] = k;
    row["homogeneous"] = aut.homogeneity[k] ? json(*aut.homogeneity[k]) : json(nullptr);
    spectrum.push_back(std::move(row));
  }
  doc["homogeneity"] = spectrum;
  doc["max_homogeneity"] = max_hom;

  std::ostringstream human;
  human << spec << ": n=" << g.order() << ", m=" << g.edge_count() << '\n'
        << "  aut order:          " << aut.order.str() << '\n'
        << "  generators:         ";
  if (aut.group.generators().empty()) human << "(none)";
  for (const auto &p : aut.group.generators()) human << ftspare::format_cycles(p) << ' ';
  human << '\n'
        << "  vertex-transitive:  " << (aut.vertex_transitive ? "yes" : "no") << '\n'
        << "  max homogeneity:    " << max_hom << '\n'
        << "  homogeneity by k:   ";
  for (unsigned k = 0; k <= g.order(); ++k)
    human << k << ':' << tri_state(aut.homogeneity[k]) << ' ';
  human << '\n';
  emit(doc, as_json, human.str());
  return 0;
}

int run_check_ftr(const std::string &host_spec, const std::string &basic_spec, unsigned k,
                  bool relaxed, unsigned threads, bool as_json) {
  Graph host = load_graph(host_spec);
  Graph basic = load_graph(basic_spec);
  auto rc = ftspare::is_k_fault_tolerant_realization(host, basic, k, relaxed, threads);

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "check-ftr";
  doc["host"] = ftspare::emit_graph6(rc.host);
  doc["basic"] = ftspare::emit_graph6(rc.basic);
  doc["k"] = rc.k;
  doc["relaxed"] = relaxed;
  doc["verdict"] = rc.verdict;
  doc["counterexample"] =
      rc.counterexample ? json(rc.counterexample->members()) : json(nullptr);
  doc["checked_subsets"] = rc.checked_subsets;

  std::ostringstream human;
  if (rc.verdict) {
    human << "verdict: true - every " << k << "-subset of faults leaves a copy of the basic graph ("
          << rc.checked_subsets << " subsets checked)\n";
  } else {
    human << "verdict: false - fault set {";
    for (std::size_t i = 0; i < rc.counterexample->members().size(); ++i)
      human << (i ? "," : "") << rc.counterexample->members()[i];
    human << "} leaves no copy of the basic graph (" << rc.checked_subsets
          << " subsets checked before stopping)\n";
  }
  emit(doc, as_json, human.str());
  return rc.verdict ? 0 : 1;
}

int run_homogeneity(const std::string &graph_spec, const std::string &group_spec,
                    std::optional<unsigned> k_opt, bool as_json) {
  std::string source;
  std::optional<ftspare::PermGroup> group;
  if (!group_spec.empty()) {
    std::ifstream in(group_spec);
    if (!in) throw ftspare::ParseError("cannot read group file: " + group_spec);
    std::stringstream buffer;
    buffer << in.rdbuf();
    group = ftspare::parse_generator_file(buffer.str());
    source = group_spec;
  } else {
    Graph g = load_graph(graph_spec);
    group = ftspare::automorphism_generators(g);
    source = graph_spec + " (automorphism group)";
  }

  unsigned n = group->degree();
  unsigned k_lo = k_opt.value_or(0), k_hi = k_opt.value_or(n);
  if (k_hi > n) throw ftspare::InvalidRange("--k exceeds the group degree");

  json entries = json::array();
  std::ostringstream human;
  human << source << ": degree " << n << ", order " << group->order().str() << '\n';
  int exit_code = 0;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    std::optional<bool> hom, trans;
    try {
      hom = ftspare::is_k_homogeneous(*group, k);
    } catch (const ftspare::CapExceeded &) {
    }
    try {
      trans = ftspare::is_k_transitive(*group, k);
    } catch (const ftspare::CapExceeded &) {
    }
    json row;
    row["k"] = k;
    row["homogeneous"] = hom ? json(*hom) : json(nullptr);
    row["transitive"] = trans ? json(*trans) : json(nullptr);
    entries.push_back(std::move(row));
    human << "  k=" << k << ": homogeneous " << tri_state(hom) << ", transitive "
          << tri_state(trans) << '\n';
    if (k_opt && !(hom && *hom)) exit_code = 1; // single-k query acts as a verdict
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "homogeneity";
  doc["source"] = source;
  doc["degree"] = n;
  doc["order"] = group->order().str();
  doc["entries"] = entries;
  emit(doc, as_json, human.str());
  return exit_code;
}

int run_reconfigure(const std::string &host_spec, const std::string &spares_text,
                    const std::string &faults_text, bool as_json) {
  Graph host = load_graph(host_spec);
  VertexSet spares = parse_vertex_list(spares_text);
  VertexSet faults = parse_vertex_list(faults_text);
  auto plan = ftspare::find_reconfiguration(host, spares, faults);

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "reconfigure";
  doc["host"] = ftspare::emit_graph6(host);
  doc["spares"] = spares.members();
  doc["faults"] = faults.members();
  doc["found"] = plan.has_value();
  if (plan) {
    doc["automorphism"] = plan->automorphism.images();
    doc["automorphism_cycles"] = ftspare::format_cycles(plan->automorphism);
    json relabel = json::array();
    for (unsigned v = 0; v < host.order(); ++v)
      if (plan->relabel[v] >= 0) relabel.push_back({v, plan->relabel[v]});
    doc["relabel"] = relabel;
  } else {
    doc["automorphism"] = nullptr;
    doc["relabel"] = nullptr;
  }

  std::ostringstream human;
  if (plan) {
    human << "reconfiguration found: " << ftspare::format_cycles(plan->automorphism) << '\n'
          << "  surviving vertex -> role:";
    for (unsigned v = 0; v < host.order(); ++v)
      if (plan->relabel[v] >= 0) human << ' ' << v << "->" << plan->relabel[v];
    human << '\n';
  } else {
    human << "no automorphism maps the spare set onto the fault set\n";
  }
  emit(doc, as_json, human.str());
  return plan ? 0 : 1;
}

int run_build_sparing(const std::string &basic_spec, unsigned k, const std::string &policy_name,
                      const std::string &format, const std::string &output, bool as_json) {
  Graph basic = load_graph(basic_spec);
  ftspare::SparePolicy policy = policy_name == "universal-clique"
                                    ? ftspare::SparePolicy::universal_clique
                                    : ftspare::SparePolicy::universal;
  Graph result = ftspare::build_global_sparing(basic, k, policy);
  std::string text =
      format == "edgelist" ? ftspare::emit_edge_list(result) : ftspare::emit_graph6(result) + "\n";

  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ftspare::Error("cannot write output file: " + output);
    out << text;
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "build-sparing";
  doc["basic"] = ftspare::emit_graph6(basic);
  doc["k"] = k;
  doc["policy"] = policy_name;
  doc["n"] = result.order();
  doc["m"] = result.edge_count();
  doc["graph6"] = ftspare::emit_graph6(result);

  if (as_json)
    std::cout << doc.dump(2) << '\n';
  else if (output.empty())
    std::cout << text;
  else
    std::cout << "wrote " << output << " (n=" << result.order() << ", m=" << result.edge_count()
              << ")\n";
  return 0;
}

int run_verify(const std::string &suite, std::optional<unsigned> n_max, unsigned threads,
               bool as_json) {
  auto reports = ftspare::run_suites(suite, n_max, threads);

  bool all_ok = true;
  json arr = json::array();
  std::ostringstream human;
  for (const auto &r : reports) {
    all_ok = all_ok && r.ok();
    json jr;
    jr["suite"] = r.suite;
    jr["parameters"] = r.parameters;
    jr["instances_checked"] = r.instances_checked;
    json cxs = json::array();
    for (const auto &cx : r.counterexamples) cxs.push_back({{"instance", cx.instance}, {"detail", cx.detail}});
    jr["counterexamples"] = cxs;
    jr["boundary_witnesses"] = r.boundary_witnesses;
    arr.push_back(std::move(jr));

    human << r.suite << ": " << (r.ok() ? "ok" : "FAILED") << " (" << r.instances_checked
          << " instances";
    if (!r.boundary_witnesses.empty()) {
      human << ", boundary witnesses:";
      for (const auto &w : r.boundary_witnesses) human << ' ' << w;
    }
    human << ")\n";
    for (const auto &cx : r.counterexamples)
      human << "  counterexample " << cx.instance << ": " << cx.detail << '\n';
    std::cerr << "[timing] " << r.suite << ": " << r.elapsed.count() << " s\n";
  }

  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "verify";
  doc["suite"] = suite;
  doc["ok"] = all_ok;
  doc["reports"] = arr;
  emit(doc, as_json, human.str());
  return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"fault-tolerant supergraph analysis"};
  app.require_subcommand(1);
  app.fallthrough(); // lets --threads appear after the subcommand name

  int threads_arg = 0;
  app.add_option("--threads", threads_arg, "worker threads for scans (default: all cores)")
      ->envname("FTSPARE_THREADS");

  std::string graph_spec, host_spec, basic_spec, group_spec, spares_text, faults_text;
  std::string policy = "universal", format = "g6", output, suite;
  unsigned k = 0;
  int k_flag = -1;
  std::optional<unsigned> n_max;
  unsigned n_max_arg = 0;
  bool relaxed = false, as_json = false;

  auto *analyze = app.add_subcommand("analyze", "automorphism group and symmetry facts of a graph");
  analyze->add_option("--graph", graph_spec, "graph file (graph6 or edge list) or named graph")
      ->required();
  analyze->add_flag("--json", as_json, "machine-readable output");

  auto *check = app.add_subcommand("check-ftr", "verify a k-fault-tolerant realization");
  check->add_option("--host", host_spec, "candidate supergraph")->required();
  check->add_option("--basic", basic_spec, "graph that must survive any k faults")->required();
  check->add_option("--k", k, "fault budget")->required();
  check->add_flag("--relaxed", relaxed, "allow the host to have more than n+k vertices");
  check->add_flag("--json", as_json, "machine-readable output");

  auto *hom = app.add_subcommand("homogeneity", "k-homogeneity / k-transitivity of a group action");
  hom->add_option("--graph", graph_spec, "graph whose automorphism group to test");
  hom->add_option("--group", group_spec, "generator file (first line \"degree n\")");
  hom->add_option("--k", k_flag, "single k to test (default: whole spectrum)");
  hom->add_flag("--json", as_json, "machine-readable output");

  auto *reconf = app.add_subcommand("reconfigure", "map a spare set onto a fault set by an automorphism");
  reconf->add_option("--host", host_spec, "host graph")->required();
  reconf->add_option("--spares", spares_text, "comma-separated spare vertices, e.g. 8,9")->required();
  reconf->add_option("--faults", faults_text, "comma-separated faulty vertices, e.g. 3,5")->required();
  reconf->add_flag("--json", as_json, "machine-readable output");

  auto *build = app.add_subcommand("build-sparing", "attach spare nodes to a basic graph");
  build->add_option("--basic", basic_spec, "basic graph")->required();
  build->add_option("--k", k, "number of spares")->required();
  build->add_option("--policy", policy, "universal | universal-clique")
      ->check(CLI::IsMember({"universal", "universal-clique"}));
  build->add_option("--format", format, "g6 | edgelist")->check(CLI::IsMember({"g6", "edgelist"}));
  build->add_option("--output", output, "write to file instead of stdout");
  build->add_flag("--json", as_json, "machine-readable output");

  auto *verify = app.add_subcommand("verify", "run the exhaustive verification suites");
  verify->add_option("--suite", suite,
                     "theorem3subsets | main | lemma-s7 | q3 | group-lemmas | corollaries | all")
      ->required();
  verify->add_option("--nmax", n_max_arg, "largest vertex count for the graph scans");
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  unsigned threads = ftspare::resolve_threads(threads_arg);
  if (verify->count("--nmax")) n_max = n_max_arg;

  try {
    if (app.got_subcommand(analyze)) return run_analyze(graph_spec, as_json);
    if (app.got_subcommand(check))
      return run_check_ftr(host_spec, basic_spec, k, relaxed, threads, as_json);
    if (app.got_subcommand(hom)) {
      if (graph_spec.empty() == group_spec.empty())
        throw ftspare::ParseError("homogeneity: give exactly one of --graph or --group");
      std::optional<unsigned> k_opt;
      if (k_flag >= 0) k_opt = static_cast<unsigned>(k_flag);
      return run_homogeneity(graph_spec, group_spec, k_opt, as_json);
    }
    if (app.got_subcommand(reconf))
      return run_reconfigure(host_spec, spares_text, faults_text, as_json);
    if (app.got_subcommand(build))
      return run_build_sparing(basic_spec, k, policy, format, output, as_json);
    if (app.got_subcommand(verify)) return run_verify(suite, n_max, threads, as_json);
  } catch (const ftspare::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
