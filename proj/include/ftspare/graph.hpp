#ifndef FTSPARE_GRAPH_HPP
#define FTSPARE_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftspare {

/// Sorted, duplicate-free set of vertex indices. Range checks against a
/// particular graph happen in the operations that take one.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<unsigned> members); // sorts and dedups
  VertexSet(std::initializer_list<unsigned> members);

  static VertexSet from_mask(std::uint64_t mask);

  const std::vector<unsigned> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(unsigned v) const;
  std::uint64_t mask() const; // requires all members < 64

  bool operator==(const VertexSet &) const = default;
  auto operator<=>(const VertexSet &) const = default;

private:
  std::vector<unsigned> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the
/// edge list is kept sorted with u < v, and adjacency is mirrored into
/// per-vertex bitmask rows, which caps the order at 64 (above the graph6
/// limit of 62).
class Graph {
public:
  static constexpr unsigned kMaxVertices = 64;

  Graph() = default;

  unsigned order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<unsigned, unsigned>> &edges() const { return edges_; }

  bool adjacent(unsigned u, unsigned v) const {
    return u < n_ && v < n_ && (adj_[u] >> v) & 1u;
  }
  std::uint64_t row(unsigned v) const { return adj_[v]; }
  unsigned degree(unsigned v) const;

  bool is_complete() const { return edge_count() == (std::size_t)n_ * (n_ - (n_ ? 1 : 0)) / 2; }
  bool has_edges() const { return !edges_.empty(); }

  bool operator==(const Graph &) const = default;

  /// Internal fast path: edges must already be normalized (u < v, sorted,
  /// unique, in range). Used by the enumeration loops.
  static Graph unchecked(unsigned n, std::vector<std::pair<unsigned, unsigned>> edges);

private:
  unsigned n_ = 0;
  std::vector<std::pair<unsigned, unsigned>> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Normalizing constructor: orients pairs as u < v, drops duplicates.
/// Throws InvalidEdge on loops or out-of-range endpoints.
Graph make_graph(unsigned n, const std::vector<std::pair<unsigned, unsigned>> &edges);

Graph complete_graph(unsigned n);
Graph cycle_graph(unsigned n); // n >= 3
Graph path_graph(unsigned n);
Graph hypercube(unsigned d); // 2^d vertices, labels are binary expansions

Graph complement(const Graph &g);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new; // -1 for deleted vertices
};

/// Remove the vertices in w; survivors are relabeled 0..n-|w|-1 preserving
/// relative order.
VertexDeletion delete_vertices(const Graph &g, const VertexSet &w);

Graph induced_subgraph(const Graph &g, const VertexSet &s);

std::vector<unsigned> degree_sequence(const Graph &g);

// graph6, short form only (n <= 62)
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph &g);

// edge-list format: first line "n m", then m lines "u v"
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph &g);

/// Edge bitmask in column order (0,1),(0,2),(1,2),(0,3),..., the same
/// order graph6 packs bits in. Requires C(n,2) <= 64.
std::uint64_t edge_mask_of(const Graph &g);
Graph graph_from_edge_mask(unsigned n, std::uint64_t mask);

} // namespace ftspare

#endif
