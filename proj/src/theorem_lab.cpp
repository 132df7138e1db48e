#include "ftspare/theorem_lab.hpp"

#include <algorithm>
#include <bit>

#include "ftspare/autgroup.hpp"
#include "ftspare/combinatorics.hpp"
#include "ftspare/errors.hpp"
#include "ftspare/fault.hpp"
#include "ftspare/parallel.hpp"
#include "ftspare/subiso.hpp"

namespace ftspare {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  std::chrono::duration<double> stop() const { return Clock::now() - start; }
};

std::uint64_t graph_count(unsigned n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Pair-bit masks of all 3-subsets of {0..n-1}; a graph has identical
// 3-vertex induced subgraphs iff the popcounts mask & triple are all equal
// (3-vertex graphs are isomorphic iff their edge counts agree).
std::vector<std::uint64_t> triple_masks(unsigned n) {
  auto pair_bit = [](unsigned u, unsigned v) { // u < v
    return std::uint64_t{1} << (v * (v - 1) / 2 + u);
  };
  std::vector<std::uint64_t> masks;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c)
        masks.push_back(pair_bit(a, b) | pair_bit(a, c) | pair_bit(b, c));
  return masks;
}

bool all_triples_induce_same(std::uint64_t edge_mask, const std::vector<std::uint64_t> &triples) {
  int first = std::popcount(edge_mask & triples[0]);
  for (std::size_t i = 1; i < triples.size(); ++i)
    if (std::popcount(edge_mask & triples[i]) != first) return false;
  return true;
}

// Scan all edge masks of n-vertex graphs in ascending order across worker
// chunks; per-chunk counterexample lists are concatenated in chunk order so
// the report is independent of the thread count.
template <typename PerMask>
void scan_masks(unsigned n, unsigned threads, std::vector<Counterexample> &out,
                const PerMask &per_mask) {
  std::uint64_t total = graph_count(n);
  unsigned chunks = threads ? threads : 1;
  std::vector<std::vector<Counterexample>> local(chunks);
  parallel_ranges(total, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t mask = begin; mask < end; ++mask) per_mask(mask, local[chunk]);
  });
  for (auto &chunk : local)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
}

} // namespace

LabeledGraphStream::LabeledGraphStream(unsigned n, unsigned n_cap) : n_(n) {
  if (n > n_cap)
    throw UniverseTooLarge("labeled graph enumeration capped at n = " + std::to_string(n_cap));
  total_ = graph_count(n);
}

std::optional<Graph> LabeledGraphStream::next() {
  if (next_mask_ >= total_) return std::nullopt;
  return graph_from_edge_mask(n_, next_mask_++);
}

VerificationReport verify_theorem_3subsets(unsigned n_min, unsigned n_max, unsigned threads) {
  if (n_min < 5 || n_min > n_max || n_max > 7)
    throw InvalidRange("verify_theorem_3subsets: need 5 <= n_min <= n_max <= 7");
  Timer timer;
  VerificationReport report;
  report.suite = "theorem3subsets";
  report.parameters["n_min"] = std::to_string(n_min);
  report.parameters["n_max"] = std::to_string(n_max);

  for (unsigned n = n_min; n <= n_max; ++n) {
    auto triples = triple_masks(n);
    std::uint64_t full = graph_count(n) - 1;
    report.instances_checked += graph_count(n);
    scan_masks(n, threads, report.counterexamples,
               [&](std::uint64_t mask, std::vector<Counterexample> &out) {
                 if (mask == 0 || mask == full) return;
                 if (all_triples_induce_same(mask, triples))
                   out.push_back({emit_graph6(graph_from_edge_mask(n, mask)),
                                  "3-subsets all induce the same subgraph but the graph is "
                                  "not complete (n=" + std::to_string(n) + ")"});
               });
  }

  // boundary case: on 4 vertices non-complete witnesses do exist
  {
    auto triples = triple_masks(4);
    std::uint64_t full = graph_count(4) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask)
      if (all_triples_induce_same(mask, triples))
        report.boundary_witnesses.push_back(emit_graph6(graph_from_edge_mask(4, mask)));
    report.parameters["boundary_n4_instances"] = std::to_string(graph_count(4));
    report.parameters["boundary_n4_witnesses"] = std::to_string(report.boundary_witnesses.size());
  }

  report.elapsed = timer.stop();
  return report;
}

VerificationReport verify_main_theorem(unsigned n_max, unsigned threads) {
  if (n_max < 4 || n_max > 7) throw InvalidRange("verify_main_theorem: need 4 <= n_max <= 7");
  Timer timer;
  VerificationReport report;
  report.suite = "main";
  report.parameters["n_max"] = std::to_string(n_max);
  report.parameters["k2_note"] =
      "the k=2 rows cover the two-spare special case; no separate suite needed";

  for (unsigned n = 4; n <= n_max; ++n) {
    std::uint64_t full = graph_count(n) - 1;
    report.instances_checked += graph_count(n) - 1; // nonempty graphs only
    scan_masks(n, threads, report.counterexamples,
               [&](std::uint64_t mask, std::vector<Counterexample> &out) {
                 if (mask == 0) return;
                 Graph g = graph_from_edge_mask(n, mask);
                 PermGroup aut = automorphism_generators(g);
                 for (unsigned k = 2; k + 2 <= n; ++k) {
                   if (!is_k_homogeneous(aut, k)) continue;
                   if (mask != full)
                     out.push_back({emit_graph6(g),
                                    "Aut is " + std::to_string(k) +
                                        "-homogeneous but the graph is not complete"});
                   else if (aut.order() != Bignum::factorial(n))
                     out.push_back({emit_graph6(g),
                                    "qualifying graph whose Aut order " + aut.order().str() +
                                        " is not " + std::to_string(n) + "!"});
                 }
               });
  }

  report.elapsed = timer.stop();
  return report;
}

VerificationReport verify_lemma_s7() {
  Timer timer;
  VerificationReport report;
  report.suite = "lemma-s7";

  Permutation x = parse_cycles("(1 2 3 4 5 6 7)", 7);
  Permutation y = parse_cycles("(2 3 5)(4 7 6)", 7);
  PermGroup g(7, {x, y});
  std::string instance = emit_generator_file(g);
  auto expect = [&](bool cond, const std::string &what) {
    ++report.instances_checked;
    if (!cond) report.counterexamples.push_back({instance, what});
  };

  expect(g.order() == 21, "group order is " + g.order().str() + ", expected 21");
  expect(compose(x, y) == compose(y, compose(x, x)), "relation xy = yx^2 fails");
  expect(is_k_homogeneous(g, 2), "not 2-homogeneous");
  expect(!is_k_transitive(g, 2), "unexpectedly 2-transitive");
  expect(orbit_of_tuple(g, {0, 1}).size() == 21, "ordered-pair orbit size is not 21");
  expect(count_orbits_on_ktuples(g, 2) == 2, "expected exactly 2 orbits on ordered pairs");

  report.parameters["order"] = g.order().str();
  report.parameters["two_transitive_needs_at_least"] = "42";
  report.elapsed = timer.stop();
  return report;
}

VerificationReport verify_q3_example() {
  Timer timer;
  VerificationReport report;
  report.suite = "q3";

  Graph q3 = hypercube(3);
  Graph x = build_global_sparing(q3, 2, SparePolicy::universal);
  std::string instance = emit_graph6(x);
  auto expect = [&](bool cond, const std::string &what) {
    ++report.instances_checked;
    if (!cond) report.counterexamples.push_back({instance, what});
  };

  auto rc = is_k_fault_tolerant_realization(x, q3, 2);
  expect(rc.verdict, "not a 2-fault-tolerant realization of the cube");
  expect(rc.checked_subsets == 45,
         "expected 45 fault pairs, checked " + std::to_string(rc.checked_subsets));

  auto spectrum = homogeneity_spectrum_report(x);
  for (const auto &entry : spectrum) {
    bool expected = entry.k == 0 || entry.k == x.order();
    expect(entry.homogeneous.has_value() && *entry.homogeneous == expected,
           "homogeneity at k=" + std::to_string(entry.k) + " should be " +
               (expected ? "true" : "false"));
  }

  auto aut = automorphism_group(x);
  expect(!aut.vertex_transitive, "the spared cube should not be vertex-transitive");

  auto degrees = degree_sequence(x);
  expect(degrees[8] == 8 && degrees[9] == 8, "spare degrees should be 8");
  // the computed degree of a cube vertex is 5: three cube neighbors plus
  // both spares
  bool cube_degrees_ok = true;
  for (unsigned v = 0; v < 8; ++v) cube_degrees_ok &= degrees[v] == 5;
  expect(cube_degrees_ok, "cube-vertex degrees should be 5");

  Graph c6 = cycle_graph(6);
  auto antipodal = delete_vertices(q3, VertexSet{0, 7}).graph;
  expect(antipodal.order() == 6 && antipodal.edge_count() == 6 &&
             contains_subgraph(antipodal, c6).has_value(),
         "removing an antipodal pair should leave a 6-cycle");
  auto adjacent = delete_vertices(q3, VertexSet{0, 1}).graph;
  expect(contains_subgraph(adjacent, c6).has_value(),
         "removing an adjacent pair should leave a graph containing a 6-cycle");

  report.parameters["fault_pairs"] = std::to_string(rc.checked_subsets);
  report.parameters["aut_order"] = aut.order.str();
  report.parameters["cube_vertex_degree"] = "5";
  report.elapsed = timer.stop();
  return report;
}

std::vector<NamedGroup> lemma_corpus() {
  std::vector<NamedGroup> corpus;
  corpus.push_back({"S7", PermGroup::symmetric(7)});
  corpus.push_back({"F21", PermGroup(7, {parse_cycles("(1 2 3 4 5 6 7)", 7),
                                         parse_cycles("(2 3 5)(4 7 6)", 7)})});
  corpus.push_back({"C7", PermGroup::cyclic(7)});
  corpus.push_back({"D4", PermGroup::dihedral(4)});
  corpus.push_back({"trivial5", PermGroup::trivial(5)});
  corpus.push_back({"AutQ3", automorphism_generators(hypercube(3))});
  return corpus;
}

VerificationReport verify_group_lemmas(const std::vector<NamedGroup> &corpus) {
  Timer timer;
  VerificationReport report;
  report.suite = "group-lemmas";
  report.parameters["corpus_size"] = std::to_string(corpus.size());

  for (const auto &[name, group] : corpus) {
    unsigned n = group.degree();
    std::string instance = emit_generator_file(group);
    auto expect = [&](bool cond, const std::string &what) {
      ++report.instances_checked;
      if (!cond) report.counterexamples.push_back({instance, name + ": " + what});
    };

    std::vector<bool> hom(n + 1), trans(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      hom[k] = is_k_homogeneous(group, k);
      trans[k] = is_k_transitive(group, k);
    }
    for (unsigned k = 0; k <= n; ++k) {
      expect(!trans[k] || hom[k],
             std::to_string(k) + "-transitive but not " + std::to_string(k) + "-homogeneous");
      expect(hom[k] == hom[n - k],
             std::to_string(k) + "-homogeneity differs from " + std::to_string(n - k) +
                 "-homogeneity");
      if (k >= 2)
        expect(!trans[k] || trans[k - 1],
               std::to_string(k) + "-transitive but not " + std::to_string(k - 1) +
                   "-transitive");
    }
    for (unsigned m = 0; m <= n; ++m)
      for (unsigned k = m; m + k <= n; ++k) {
        auto check = orbit_count_monotonicity_check(group, m, k);
        expect(check.holds, "orbit counts not monotone at m=" + std::to_string(m) +
                                ", k=" + std::to_string(k) + " (" +
                                std::to_string(check.orbits_m) + " vs " +
                                std::to_string(check.orbits_k) + ")");
      }
  }

  report.elapsed = timer.stop();
  return report;
}

VerificationReport verify_group_lemmas() { return verify_group_lemmas(lemma_corpus()); }

VerificationReport corollary_checks(unsigned n_max, unsigned threads) {
  if (n_max < 4 || n_max > 7) throw InvalidRange("corollary_checks: need 4 <= n_max <= 7");
  Timer timer;
  VerificationReport report;
  report.suite = "corollaries";
  report.parameters["n_max"] = std::to_string(n_max);

  for (unsigned n = 4; n <= n_max; ++n) {
    report.instances_checked += graph_count(n);
    scan_masks(n, threads, report.counterexamples,
               [&](std::uint64_t mask, std::vector<Counterexample> &out) {
                 Graph g = graph_from_edge_mask(n, mask);
                 PermGroup aut = automorphism_generators(g);
                 for (unsigned k = 2; k + 2 <= n; ++k) {
                   if (!is_k_homogeneous(aut, k)) continue;
                   for (unsigned i = 1; i < k; ++i)
                     if (!is_k_homogeneous(aut, i))
                       out.push_back({emit_graph6(g),
                                      std::to_string(k) + "-homogeneous but not " +
                                          std::to_string(i) + "-homogeneous"});
                   if (aut.order() != Bignum::factorial(n))
                     out.push_back({emit_graph6(g),
                                    "Aut order " + aut.order().str() + " is not " +
                                        std::to_string(n) + "!"});
                 }
               });
  }

  // tightness of the 2 <= k <= n-2 range: cycle graphs are 1- and
  // (n-1)-homogeneous and nothing in between
  for (unsigned n = 4; n <= n_max; ++n) {
    Graph c = cycle_graph(n);
    PermGroup aut = automorphism_generators(c);
    ++report.instances_checked;
    bool ok = is_k_homogeneous(aut, 1) && is_k_homogeneous(aut, n - 1);
    for (unsigned i = 2; ok && i + 2 <= n; ++i) ok = !is_k_homogeneous(aut, i);
    if (!ok)
      report.counterexamples.push_back(
          {emit_graph6(c), "cycle on " + std::to_string(n) +
                               " vertices does not witness the tightness pattern"});
  }

  report.elapsed = timer.stop();
  return report;
}

std::vector<VerificationReport> run_suites(const std::string &suite,
                                           std::optional<unsigned> n_max, unsigned threads) {
  std::vector<VerificationReport> reports;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "theorem3subsets") {
    reports.push_back(verify_theorem_3subsets(5, n_max.value_or(6), threads));
    known = true;
  }
  if (all || suite == "main") {
    reports.push_back(verify_main_theorem(n_max.value_or(6), threads));
    known = true;
  }
  if (all || suite == "lemma-s7") {
    reports.push_back(verify_lemma_s7());
    known = true;
  }
  if (all || suite == "q3") {
    reports.push_back(verify_q3_example());
    known = true;
  }
  if (all || suite == "group-lemmas") {
    reports.push_back(verify_group_lemmas());
    known = true;
  }
  if (all || suite == "corollaries") {
    reports.push_back(corollary_checks(n_max.value_or(6), threads));
    known = true;
  }
  if (!known) throw InvalidRange("unknown suite: " + suite);
  return reports;
}

} // namespace ftspare
