#ifndef FTSPARE_THEOREM_LAB_HPP
#define FTSPARE_THEOREM_LAB_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ftspare/graph.hpp"
#include "ftspare/perm_group.hpp"

namespace ftspare {

/// A failed instance, carried in a form that can be re-checked directly:
/// a graph6 string or a generator-list text, plus what went wrong.
struct Counterexample {
  std::string instance;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> boundary_witnesses; // graph6; the 3-subset suite's n=4 run
  std::map<std::string, std::string> parameters;
  std::chrono::duration<double> elapsed{0};

  bool ok() const { return counterexamples.empty(); }
};

/// All 2^C(n,2) labeled graphs on n vertices, in edge-bitmask order.
class LabeledGraphStream {
public:
  explicit LabeledGraphStream(unsigned n, unsigned n_cap = 7);
  std::optional<Graph> next();
  std::uint64_t total() const { return total_; }

private:
  unsigned n_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t total_;
};

/// Every labeled graph on n_min..n_max vertices with at least one edge whose
/// 3-subsets all induce the same subgraph must be complete. Also runs the
/// n = 4 boundary case and reports its non-complete witnesses.
VerificationReport verify_theorem_3subsets(unsigned n_min = 5, unsigned n_max = 6,
                                           unsigned threads = 1);

/// Every labeled nonempty graph on up to n_max vertices whose automorphism
/// group is k-homogeneous for some 2 <= k <= n-2 must be complete, with the
/// full symmetric group as its automorphism group.
VerificationReport verify_main_theorem(unsigned n_max = 6, unsigned threads = 1);

/// The order-21 subgroup of S7 generated by the 7-cycle and (2 3 5)(4 7 6):
/// order, the defining relation, 2-homogeneous but not 2-transitive, and
/// its two orbits on ordered pairs.
VerificationReport verify_lemma_s7();

/// The cube plus two universal spares: a 2-fault-tolerant realization of
/// the cube that is k-homogeneous for no k in 1..9.
VerificationReport verify_q3_example();

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// The fixed group corpus the lemma suite runs over.
std::vector<NamedGroup> lemma_corpus();

/// For every corpus group and every legal k: k-transitive implies
/// k-homogeneous, k-homogeneous iff (n-k)-homogeneous, k-transitive implies
/// (k-1)-transitive, and the orbit-count monotonicity check holds.
VerificationReport verify_group_lemmas(const std::vector<NamedGroup> &corpus);
VerificationReport verify_group_lemmas();

/// Whenever Aut is k-homogeneous for some 2 <= k <= n-2, it is also
/// i-homogeneous for all i < k and has order n!. Cycle graphs witness the
/// tightness of the k-range.
VerificationReport corollary_checks(unsigned n_max = 6, unsigned threads = 1);

/// CLI dispatch: suite is one of theorem3subsets, main, lemma-s7, q3,
/// group-lemmas, corollaries, all.
std::vector<VerificationReport> run_suites(const std::string &suite,
                                           std::optional<unsigned> n_max, unsigned threads);

} // namespace ftspare

#endif
