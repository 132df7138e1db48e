#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ftspare/errors.hpp"
#include "ftspare/graph.hpp"
#include "oracles.hpp"

using namespace ftspare;

namespace {

Graph random_graph(std::mt19937 &rng, unsigned n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

} // namespace

TEST_CASE("make_graph normalizes and validates") {
  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(3, 0));
  CHECK(!c4.adjacent(0, 2));

  Graph dup = make_graph(3, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), InvalidEdge);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), InvalidEdge);
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_graph(0).edge_count() == 0);
  CHECK(complete_graph(0).order() == 0);
  CHECK(complete_graph(10).edge_count() == 45);
  CHECK(complete_graph(5).is_complete());
}

TEST_CASE("hypercube") {
  Graph q3 = hypercube(3);
  CHECK(q3.order() == 8);
  CHECK(q3.edge_count() == 12);
  for (unsigned v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);

  Graph q1 = hypercube(1);
  CHECK(q1 == make_graph(2, {{0, 1}}));

  // Q2 is the 4-cycle: confirmed against every bijection
  CHECK(oracles::brute_force_isomorphic(hypercube(2), cycle_graph(4)));
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  Graph c4 = cycle_graph(4);
  Graph cc = complement(c4);
  CHECK(cc.edges() == std::vector<std::pair<unsigned, unsigned>>{{0, 2}, {1, 3}});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned n = rng() % 10;
    Graph g = random_graph(rng, n, 0.4);
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() == n * (n ? n - 1 : 0) / 2);
  }
}

TEST_CASE("delete_vertices relabels compactly") {
  Graph q3 = hypercube(3);
  auto del = delete_vertices(q3, VertexSet{0, 7}); // an antipodal pair
  CHECK(del.graph.order() == 6);
  CHECK(del.graph.edge_count() == 6);
  CHECK(oracles::brute_force_isomorphic(del.graph, cycle_graph(6)));

  auto iddel = delete_vertices(q3, VertexSet{});
  CHECK(iddel.graph == q3);

  auto k5 = delete_vertices(complete_graph(5), VertexSet{1, 3});
  CHECK(k5.graph == complete_graph(3));

  CHECK_THROWS_AS(delete_vertices(q3, VertexSet{8}), InvalidVertex);
}

TEST_CASE("delete_vertices preserves surviving edges under the label map") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned n = 1 + rng() % 8;
    Graph g = random_graph(rng, n, 0.5);
    std::vector<unsigned> drop;
    for (unsigned v = 0; v < n; ++v)
      if (rng() % 3 == 0) drop.push_back(v);
    VertexSet w(drop);
    auto del = delete_vertices(g, w);
    CHECK(del.graph.order() == n - w.size());
    // exhaustive cross-check of every pair
    for (unsigned u = 0; u < n; ++u)
      for (unsigned v = u + 1; v < n; ++v) {
        if (del.old_to_new[u] < 0 || del.old_to_new[v] < 0) continue;
        CHECK(g.adjacent(u, v) ==
              del.graph.adjacent(static_cast<unsigned>(del.old_to_new[u]),
                                 static_cast<unsigned>(del.old_to_new[v])));
      }
  }
}

TEST_CASE("induced_subgraph") {
  Graph c4 = cycle_graph(4);
  Graph p3 = induced_subgraph(c4, VertexSet{0, 1, 2});
  CHECK(p3 == make_graph(3, {{0, 1}, {1, 2}}));
  CHECK(induced_subgraph(complete_graph(5), VertexSet{1, 3, 4}) == complete_graph(3));
  CHECK(induced_subgraph(hypercube(3), VertexSet{5}) == complete_graph(1));
}

TEST_CASE("degree_sequence") {
  auto q3deg = degree_sequence(hypercube(3));
  for (unsigned d : q3deg) CHECK(d == 3);
  auto k6deg = degree_sequence(complete_graph(6));
  for (unsigned d : k6deg) CHECK(d == 5);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, rng() % 12, 0.5);
    auto deg = degree_sequence(g);
    std::size_t sum = 0;
    for (unsigned d : deg) sum += d;
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("graph6 hand-encoded values") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(emit_graph6(complete_graph(1)) == "@");
  CHECK(emit_graph6(complete_graph(4)) == "C~");
  CHECK(emit_graph6(Graph{}) == "?");
  CHECK(parse_graph6("?").order() == 0);

  std::string bad = "C";
  bad.push_back(static_cast<char>(200));
  bad += "~~";
  CHECK_THROWS_AS(parse_graph6(bad), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // truncated
  CHECK_THROWS_AS(parse_graph6("C~~~"), ParseError); // trailing bytes
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trips") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = rng() % 63;
    Graph g = random_graph(rng, n, 0.3);
    std::string enc = emit_graph6(g);
    CHECK(parse_graph6(enc) == g);
    CHECK(emit_graph6(parse_graph6(enc)) == enc);
  }
  CHECK_THROWS_AS(emit_graph6(complete_graph(63)), GraphTooLarge);
}

TEST_CASE("edge list format") {
  Graph g = make_graph(4, {{0, 1}, {2, 3}});
  std::string text = emit_edge_list(g);
  CHECK(text == "4 2\n0 1\n2 3\n");
  CHECK(parse_edge_list(text) == g);
  CHECK(parse_edge_list("3 0\n").edge_count() == 0);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), InvalidEdge);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge mask round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    unsigned n = rng() % 9;
    Graph g = random_graph(rng, n, 0.5);
    CHECK(graph_from_edge_mask(n, edge_mask_of(g)) == g);
  }
}
