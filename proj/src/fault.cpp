#include "ftspare/fault.hpp"

#include <atomic>
#include <unordered_map>

#include "ftspare/autgroup.hpp"
#include "ftspare/combinatorics.hpp"
#include "ftspare/errors.hpp"
#include "ftspare/parallel.hpp"
#include "ftspare/subiso.hpp"

namespace ftspare {

RealizationCheck is_k_fault_tolerant_realization(const Graph &host, const Graph &basic,
                                                 unsigned k, bool relaxed, unsigned threads) {
  unsigned n_host = host.order();
  unsigned n_basic = basic.order();
  if (!relaxed && n_host != n_basic + k)
    throw OrderMismatch("strict mode expects |V(host)| = |V(basic)| + k, got " +
                        std::to_string(n_host) + " vs " + std::to_string(n_basic) + " + " +
                        std::to_string(k));
  if (relaxed && n_host < n_basic + k)
    throw OrderMismatch("relaxed mode expects |V(host)| >= |V(basic)| + k");
  if (k > n_host) throw OrderMismatch("more faults than host vertices");

  RealizationCheck result;
  result.basic = basic;
  result.host = host;
  result.k = k;

  const std::uint64_t total = binomial(n_host, k);
  std::atomic<std::uint64_t> first_failure{UINT64_MAX};

  parallel_ranges(total, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    std::vector<unsigned> subset = ksubset_unrank(begin, n_host, k);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if (first_failure.load(std::memory_order_relaxed) < rank)
        break; // an earlier failure is already recorded; later ranks cannot beat it
      if (!contains_subgraph_after_faults(host, basic, VertexSet(subset))) {
        std::uint64_t expected = first_failure.load(std::memory_order_relaxed);
        while (rank < expected &&
               !first_failure.compare_exchange_weak(expected, rank, std::memory_order_relaxed)) {
        }
        break; // later ranks in this chunk cannot improve on a local first failure
      }
      next_ksubset(subset, n_host);
    }
  });

  // checked_subsets is reported as the sequential scan would count it, so
  // the result does not depend on the thread count
  std::uint64_t failure = first_failure.load();
  if (failure == UINT64_MAX) {
    result.verdict = true;
    result.checked_subsets = total;
  } else {
    result.verdict = false;
    result.checked_subsets = failure + 1;
    result.counterexample = VertexSet(ksubset_unrank(failure, n_host, k));
  }
  return result;
}

Graph build_global_sparing(const Graph &basic, unsigned k, SparePolicy policy) {
  unsigned n = basic.order();
  std::vector<std::pair<unsigned, unsigned>> edges = basic.edges();
  for (unsigned s = 0; s < k; ++s)
    for (unsigned v = 0; v < n; ++v) edges.emplace_back(v, n + s);
  if (policy == SparePolicy::universal_clique)
    for (unsigned s = 0; s < k; ++s)
      for (unsigned t = s + 1; t < k; ++t) edges.emplace_back(n + s, n + t);
  return make_graph(n + k, edges);
}

std::optional<ReconfigPlan> find_reconfiguration(const Graph &host, const PermGroup &aut,
                                                 const VertexSet &spares, const VertexSet &faults) {
  if (spares.size() != faults.size())
    throw SizeMismatch("find_reconfiguration: |spares| = " + std::to_string(spares.size()) +
                       " but |faults| = " + std::to_string(faults.size()));
  for (unsigned v : spares.members())
    if (v >= host.order()) throw InvalidVertex("find_reconfiguration: spare out of range");
  for (unsigned v : faults.members())
    if (v >= host.order()) throw InvalidVertex("find_reconfiguration: fault out of range");

  // BFS over the orbit of the spare set, remembering (predecessor,
  // generator) so the witness automorphism can be rebuilt.
  const std::uint64_t start = spares.mask();
  const std::uint64_t goal = faults.mask();
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::size_t>> parent;
  parent.emplace(start, std::make_pair(start, SIZE_MAX));
  std::vector<std::uint64_t> queue{start};
  bool found = start == goal;
  for (std::size_t idx = 0; idx < queue.size() && !found; ++idx) {
    for (std::size_t gi = 0; gi < aut.generators().size() && !found; ++gi) {
      std::uint64_t img = apply_mask(aut.generators()[gi], queue[idx]);
      if (parent.emplace(img, std::make_pair(queue[idx], gi)).second) {
        queue.push_back(img);
        found = img == goal;
      }
    }
  }
  if (!found) return std::nullopt;

  Permutation g = Permutation::identity(host.order());
  for (std::uint64_t at = goal; at != start;) {
    auto [prev, gi] = parent.at(at);
    g = compose(aut.generators()[gi], g); // generator applied before the path suffix
    at = prev;
  }

  ReconfigPlan plan;
  plan.host = host;
  plan.spares = spares;
  plan.faults = faults;
  plan.relabel.assign(host.order(), -1);
  Permutation ginv = inverse(g);
  for (unsigned v = 0; v < host.order(); ++v)
    if (!faults.contains(v)) plan.relabel[v] = static_cast<int>(ginv(v));
  plan.automorphism = std::move(g);
  return plan;
}

std::optional<ReconfigPlan> find_reconfiguration(const Graph &host, const VertexSet &spares,
                                                 const VertexSet &faults) {
  return find_reconfiguration(host, automorphism_generators(host), spares, faults);
}

std::vector<SpectrumEntry> homogeneity_spectrum_report(const Graph &host, std::uint64_t cap) {
  PermGroup aut = automorphism_generators(host);
  std::vector<SpectrumEntry> report;
  for (unsigned k = 0; k <= host.order(); ++k) {
    SpectrumEntry entry{k, std::nullopt, std::nullopt};
    try {
      entry.homogeneous = is_k_homogeneous(aut, k, cap);
    } catch (const CapExceeded &) {
    }
    entry.supports_reconfiguration = entry.homogeneous;
    report.push_back(entry);
  }
  return report;
}

} // namespace ftspare
