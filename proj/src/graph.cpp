#include "ftspare/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ftspare/errors.hpp"

namespace ftspare {

VertexSet::VertexSet(std::vector<unsigned> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<unsigned> members)
    : VertexSet(std::vector<unsigned>(members)) {}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<unsigned> m;
  while (mask != 0) {
    m.push_back(static_cast<unsigned>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  VertexSet s;
  s.members_ = std::move(m); // already sorted
  return s;
}

bool VertexSet::contains(unsigned v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (unsigned v : members_) {
    if (v >= 64) throw InvalidVertex("VertexSet::mask: member " + std::to_string(v) + " >= 64");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

unsigned Graph::degree(unsigned v) const {
  return static_cast<unsigned>(std::popcount(adj_[v]));
}

Graph Graph::unchecked(unsigned n, std::vector<std::pair<unsigned, unsigned>> edges) {
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, 0);
  for (auto [u, v] : g.edges_) {
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph make_graph(unsigned n, const std::vector<std::pair<unsigned, unsigned>> &edges) {
  if (n > Graph::kMaxVertices)
    throw GraphTooLarge("graphs are limited to " + std::to_string(Graph::kMaxVertices) +
                        " vertices, got " + std::to_string(n));
  std::vector<std::pair<unsigned, unsigned>> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidEdge("edge endpoint out of range: {" + std::to_string(u) + "," +
                        std::to_string(v) + "} on " + std::to_string(n) + " vertices");
    if (u == v) throw InvalidEdge("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    norm.emplace_back(u, v);
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  return Graph::unchecked(n, std::move(norm));
}

Graph complete_graph(unsigned n) {
  if (n > Graph::kMaxVertices) throw GraphTooLarge("complete_graph: n too large");
  std::vector<std::pair<unsigned, unsigned>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n ? n - 1 : 0) / 2);
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::unchecked(n, std::move(edges));
}

Graph cycle_graph(unsigned n) {
  if (n < 3) throw InvalidEdge("cycle_graph needs at least 3 vertices");
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return make_graph(n, edges);
}

Graph path_graph(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

Graph hypercube(unsigned d) {
  if (d > 6) throw GraphTooLarge("hypercube: 2^d exceeds the 64-vertex limit");
  unsigned n = 1u << d;
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned v = 0; v < n; ++v)
    for (unsigned b = 0; b < d; ++b) {
      unsigned u = v ^ (1u << b);
      if (v < u) edges.emplace_back(v, u);
    }
  std::sort(edges.begin(), edges.end());
  return Graph::unchecked(n, std::move(edges));
}

Graph complement(const Graph &g) {
  unsigned n = g.order();
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::unchecked(n, std::move(edges));
}

VertexDeletion delete_vertices(const Graph &g, const VertexSet &w) {
  unsigned n = g.order();
  for (unsigned v : w.members())
    if (v >= n) throw InvalidVertex("delete_vertices: vertex " + std::to_string(v) + " out of range");
  std::vector<int> old_to_new(n, -1);
  unsigned next = 0;
  for (unsigned v = 0; v < n; ++v)
    if (!w.contains(v)) old_to_new[v] = static_cast<int>(next++);
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (auto [u, v] : g.edges())
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
      edges.emplace_back(static_cast<unsigned>(old_to_new[u]), static_cast<unsigned>(old_to_new[v]));
  std::sort(edges.begin(), edges.end());
  return {Graph::unchecked(next, std::move(edges)), std::move(old_to_new)};
}

Graph induced_subgraph(const Graph &g, const VertexSet &s) {
  for (unsigned v : s.members())
    if (v >= g.order()) throw InvalidVertex("induced_subgraph: vertex out of range");
  std::vector<unsigned> removed;
  for (unsigned v = 0; v < g.order(); ++v)
    if (!s.contains(v)) removed.push_back(v);
  return delete_vertices(g, VertexSet(std::move(removed))).graph;
}

std::vector<unsigned> degree_sequence(const Graph &g) {
  std::vector<unsigned> deg(g.order());
  for (unsigned v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  return deg;
}

// ---------------------------------------------------------------- graph6

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

} // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("graph6: empty input");
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (c0 < 63 || c0 > 126) throw ParseError("graph6: byte out of range 63..126");
  if (c0 == 126) throw ParseError("graph6: long form (n > 62) not supported");
  unsigned n = c0 - 63;
  std::size_t nbits = static_cast<std::size_t>(n) * (n ? n - 1 : 0) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() != 1 + nbytes)
    throw ParseError("graph6: expected " + std::to_string(1 + nbytes) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(s.size()));
  std::vector<std::pair<unsigned, unsigned>> edges;
  std::size_t bit = 0;
  for (unsigned v = 1; v < n; ++v)
    for (unsigned u = 0; u < v; ++u, ++bit) {
      unsigned char byte = static_cast<unsigned char>(s[1 + bit / 6]);
      if (byte < 63 || byte > 126) throw ParseError("graph6: byte out of range 63..126");
      unsigned group = byte - 63;
      if ((group >> (5 - bit % 6)) & 1u) edges.emplace_back(u, v);
    }
  std::sort(edges.begin(), edges.end());
  return Graph::unchecked(n, std::move(edges));
}

std::string emit_graph6(const Graph &g) {
  unsigned n = g.order();
  if (n > 62) throw GraphTooLarge("graph6 short form is limited to 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned group = 0, fill = 0;
  for (unsigned v = 1; v < n; ++v)
    for (unsigned u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++fill == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        fill = 0;
      }
    }
  if (fill != 0) out.push_back(static_cast<char>(63 + (group << (6 - fill))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: expected header \"n m\"");
  if (n > Graph::kMaxVertices) throw GraphTooLarge("edge list: too many vertices");
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw ParseError("edge list: truncated after " + std::to_string(i) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidEdge("edge list: endpoint out of range");
    edges.emplace_back(static_cast<unsigned>(u), static_cast<unsigned>(v));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing content");
  return make_graph(static_cast<unsigned>(n), edges);
}

std::string emit_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::uint64_t edge_mask_of(const Graph &g) {
  unsigned n = g.order();
  if (static_cast<std::size_t>(n) * (n ? n - 1 : 0) / 2 > 64)
    throw GraphTooLarge("edge_mask_of: more than 64 vertex pairs");
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (unsigned v = 1; v < n; ++v)
    for (unsigned u = 0; u < v; ++u, ++bit)
      if (g.adjacent(u, v)) mask |= std::uint64_t{1} << bit;
  return mask;
}

Graph graph_from_edge_mask(unsigned n, std::uint64_t mask) {
  if (static_cast<std::size_t>(n) * (n ? n - 1 : 0) / 2 > 64)
    throw GraphTooLarge("graph_from_edge_mask: more than 64 vertex pairs");
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if ((mask >> (static_cast<std::size_t>(v) * (v - 1) / 2 + u)) & 1u)
        edges.emplace_back(u, v);
  return Graph::unchecked(n, std::move(edges)); // loop order is already (u,v)-lexicographic
}

} // namespace ftspare
