#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ftspare/errors.hpp"
#include "ftspare/fault.hpp"
#include "ftspare/subiso.hpp"
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

TEST_CASE("desk-sized containment facts") {
  Graph q3 = hypercube(3);
  Graph c6 = cycle_graph(6);

  auto damaged = delete_vertices(q3, VertexSet{0, 7}).graph; // antipodal pair
  auto witness = contains_subgraph(damaged, c6);
  REQUIRE(witness.has_value());
  CHECK(check_embedding(damaged, c6, *witness));

  CHECK(contains_subgraph(complete_graph(4), cycle_graph(4)).has_value());
  CHECK(!contains_subgraph(cycle_graph(4), complete_graph(3)).has_value());
  CHECK(!contains_subgraph(cycle_graph(4), cycle_graph(5)).has_value()); // pattern larger
}

TEST_CASE("agrees with brute-force injection enumeration") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    unsigned nh = 1 + rng() % 7;
    unsigned np = 1 + rng() % 6;
    Graph host = random_graph(rng, nh, 0.5);
    Graph pattern = random_graph(rng, np, 0.5);
    auto witness = contains_subgraph(host, pattern);
    CHECK(witness.has_value() == oracles::brute_force_contains(host, pattern));
    if (witness) CHECK(check_embedding(host, pattern, *witness));
  }
}

TEST_CASE("deleting host edges never creates a containment") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Graph host = random_graph(rng, 2 + rng() % 6, 0.6);
    Graph pattern = random_graph(rng, 2 + rng() % 5, 0.6);
    if (contains_subgraph(host, pattern)) continue;
    auto edges = host.edges();
    if (edges.empty()) continue;
    edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
    Graph weaker = make_graph(host.order(), edges);
    CHECK(!contains_subgraph(weaker, pattern).has_value());
  }
}

TEST_CASE("witnesses are deterministic") {
  Graph host = build_global_sparing(hypercube(3), 2, SparePolicy::universal);
  auto w1 = contains_subgraph(host, hypercube(3));
  auto w2 = contains_subgraph(host, hypercube(3));
  REQUIRE(w1.has_value());
  CHECK(w1->map == w2->map);
}

TEST_CASE("containment after faults") {
  Graph q3 = hypercube(3);
  Graph host = build_global_sparing(q3, 2, SparePolicy::universal);

  // losing both spares leaves the original cube
  auto witness = contains_subgraph_after_faults(host, q3, VertexSet{8, 9});
  REQUIRE(witness.has_value());
  CHECK(check_embedding(host, q3, *witness));
  for (unsigned hv : witness->map) CHECK(hv < 8);

  // empty fault set, pattern = host: the identity embedding
  auto self = contains_subgraph_after_faults(host, host, VertexSet{});
  REQUIRE(self.has_value());
  CHECK(check_embedding(host, host, *self));

  // K5 minus any one vertex still holds K4
  for (unsigned v = 0; v < 5; ++v)
    CHECK(contains_subgraph_after_faults(complete_graph(5), complete_graph(4), VertexSet{v})
              .has_value());

  CHECK_THROWS_AS(contains_subgraph_after_faults(q3, q3, VertexSet{12}), InvalidVertex);
}

TEST_CASE("witnesses come back in original host labels") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = 3 + rng() % 5;
    Graph host = random_graph(rng, n, 0.7);
    Graph pattern = random_graph(rng, 2 + rng() % 3, 0.5);
    std::vector<unsigned> faulty;
    for (unsigned v = 0; v < n; ++v)
      if (rng() % 4 == 0) faulty.push_back(v);
    VertexSet faults(faulty);
    auto witness = contains_subgraph_after_faults(host, pattern, faults);
    if (!witness) continue;
    CHECK(check_embedding(host, pattern, *witness));
    for (unsigned hv : witness->map) CHECK(!faults.contains(hv));
  }
}
