#include "ftspare/subiso.hpp"

#include <algorithm>

#include "ftspare/errors.hpp"

namespace ftspare {

namespace {

struct SubisoSearch {
  const Graph &host;
  const Graph &pattern;
  std::vector<unsigned> order;    // pattern vertices, descending degree
  std::vector<int> assigned;      // pattern vertex -> host vertex or -1
  std::uint64_t used_hosts = 0;

  SubisoSearch(const Graph &h, const Graph &p) : host(h), pattern(p) {
    order.resize(pattern.order());
    for (unsigned v = 0; v < pattern.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    assigned.assign(pattern.order(), -1);
  }

  bool feasible(unsigned pv, unsigned hv) const {
    if (host.degree(hv) < pattern.degree(pv)) return false;
    for (unsigned pw = 0; pw < pattern.order(); ++pw)
      if (assigned[pw] >= 0 && pattern.adjacent(pv, pw) &&
          !host.adjacent(hv, static_cast<unsigned>(assigned[pw])))
        return false;
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    unsigned pv = order[depth];
    for (unsigned hv = 0; hv < host.order(); ++hv) {
      if ((used_hosts >> hv) & 1u) continue;
      if (!feasible(pv, hv)) continue;
      assigned[pv] = static_cast<int>(hv);
      used_hosts |= std::uint64_t{1} << hv;
      if (extend(depth + 1)) return true;
      used_hosts &= ~(std::uint64_t{1} << hv);
      assigned[pv] = -1;
    }
    return false;
  }
};

} // namespace

std::optional<Embedding> contains_subgraph(const Graph &host, const Graph &pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  SubisoSearch search(host, pattern);
  if (!search.extend(0)) return std::nullopt;
  Embedding e;
  e.map.reserve(pattern.order());
  for (int hv : search.assigned) e.map.push_back(static_cast<unsigned>(hv));
  return e;
}

std::optional<Embedding> contains_subgraph_after_faults(const Graph &host, const Graph &pattern,
                                                        const VertexSet &faults) {
  auto deletion = delete_vertices(host, faults); // throws InvalidVertex on bad faults
  auto inner = contains_subgraph(deletion.graph, pattern);
  if (!inner) return std::nullopt;
  // translate back to original host labels
  std::vector<unsigned> new_to_old(deletion.graph.order());
  for (unsigned v = 0; v < host.order(); ++v)
    if (deletion.old_to_new[v] >= 0)
      new_to_old[static_cast<unsigned>(deletion.old_to_new[v])] = v;
  for (auto &hv : inner->map) hv = new_to_old[hv];
  return inner;
}

bool check_embedding(const Graph &host, const Graph &pattern, const Embedding &e) {
  if (e.map.size() != pattern.order()) return false;
  std::uint64_t seen = 0;
  for (unsigned hv : e.map) {
    if (hv >= host.order()) return false;
    if ((seen >> hv) & 1u) return false;
    seen |= std::uint64_t{1} << hv;
  }
  for (auto [u, v] : pattern.edges())
    if (!host.adjacent(e.map[u], e.map[v])) return false;
  return true;
}

} // namespace ftspare
