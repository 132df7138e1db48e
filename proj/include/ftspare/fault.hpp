#ifndef FTSPARE_FAULT_HPP
#define FTSPARE_FAULT_HPP

#include <optional>
#include <vector>

#include "ftspare/graph.hpp"
#include "ftspare/perm.hpp"
#include "ftspare/perm_group.hpp"

namespace ftspare {

/// Outcome of scanning every k-subset of host vertices for a surviving copy
/// of the basic graph.
struct RealizationCheck {
  Graph basic;
  Graph host;
  unsigned k = 0;
  bool verdict = false;
  std::optional<VertexSet> counterexample; // lexicographically first failing fault set
  std::uint64_t checked_subsets = 0;
};

/// Verdict is true iff deleting any k vertices from host leaves a graph
/// containing basic as a subgraph. Fault sets are scanned in lexicographic
/// order and the scan stops at the first failure. In strict mode (default)
/// the host must have exactly |V(basic)| + k vertices; relaxed mode only
/// requires at least that many.
RealizationCheck is_k_fault_tolerant_realization(const Graph &host, const Graph &basic,
                                                 unsigned k, bool relaxed = false,
                                                 unsigned threads = 1);

enum class SparePolicy {
  universal,        // every spare adjacent to every basic vertex, spares mutually nonadjacent
  universal_clique, // additionally joins the spares to each other
};

/// basic plus k spare vertices labeled n..n+k-1, wired per the policy.
Graph build_global_sparing(const Graph &basic, unsigned k, SparePolicy policy);

/// Recovery plan: an automorphism g of the host with spares^g = faults,
/// plus the role each surviving vertex plays afterwards (its preimage
/// under g; faulty vertices carry -1).
struct ReconfigPlan {
  Graph host;
  VertexSet spares;
  VertexSet faults;
  Permutation automorphism;
  std::vector<int> relabel;
};

/// Search Aut(host) for an automorphism mapping the spare set onto the
/// fault set, by BFS over the orbit of the spare set with path
/// reconstruction. Returns nullopt when the two sets lie in different
/// orbits.
std::optional<ReconfigPlan> find_reconfiguration(const Graph &host, const VertexSet &spares,
                                                 const VertexSet &faults);

/// Same search against a caller-supplied automorphism group (skips the
/// Aut computation; generators must be automorphisms of host).
std::optional<ReconfigPlan> find_reconfiguration(const Graph &host, const PermGroup &aut,
                                                 const VertexSet &spares, const VertexSet &faults);

struct SpectrumEntry {
  unsigned k;
  std::optional<bool> homogeneous;               // nullopt = universe above cap
  std::optional<bool> supports_reconfiguration;  // equals `homogeneous`, kept for readability
};

/// For each k in 0..n, whether Aut(host) acts transitively on k-subsets,
/// i.e. whether every k-fault pattern can be reached from every other by
/// an automorphism.
std::vector<SpectrumEntry> homogeneity_spectrum_report(const Graph &host,
                                                       std::uint64_t cap = kDefaultUniverseCap);

} // namespace ftspare

#endif
