#ifndef FTSPARE_SUBISO_HPP
#define FTSPARE_SUBISO_HPP

#include <optional>
#include <vector>

#include "ftspare/graph.hpp"

namespace ftspare {

/// Witness of a (not necessarily induced) subgraph embedding: map[i] is the
/// host vertex carrying pattern vertex i. Injective, and every pattern edge
/// lands on a host edge; the host may have extra edges.
struct Embedding {
  std::vector<unsigned> map;
};

/// Find an embedding of pattern into host, or nullopt. Deterministic:
/// pattern vertices are processed by descending degree (ties by index) and
/// host candidates ascending, so the witness returned is stable across runs.
std::optional<Embedding> contains_subgraph(const Graph &host, const Graph &pattern);

/// contains_subgraph on host minus the fault set, with the witness
/// translated back to original host labels.
std::optional<Embedding> contains_subgraph_after_faults(const Graph &host, const Graph &pattern,
                                                        const VertexSet &faults);

/// Validator kept deliberately separate from the search: injectivity plus
/// edge preservation, checked from scratch.
bool check_embedding(const Graph &host, const Graph &pattern, const Embedding &e);

} // namespace ftspare

#endif
