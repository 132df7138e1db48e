#ifndef FTSPARE_AUTGROUP_HPP
#define FTSPARE_AUTGROUP_HPP

#include <optional>
#include <vector>

#include "ftspare/bignum.hpp"
#include "ftspare/graph.hpp"
#include "ftspare/perm_group.hpp"

namespace ftspare {

struct AutomorphismGroupResult {
  PermGroup group;
  Bignum order;
  bool vertex_transitive;
  /// homogeneity[k] for k = 0..n; nullopt when the k-subset universe
  /// exceeded the cap and the answer was left unknown.
  std::vector<std::optional<bool>> homogeneity;
};

/// Generators of Aut(g), without the derived symmetry facts. Search is
/// equitable-partition refinement followed by per-level backtracking; for
/// each base vertex and each candidate image not yet reachable, the first
/// automorphism found is kept as a generator.
PermGroup automorphism_generators(const Graph &g);

/// Full automorphism group of the graph with order, vertex-transitivity and
/// the homogeneity spectrum.
AutomorphismGroupResult automorphism_group(const Graph &g,
                                           std::uint64_t cap = kDefaultUniverseCap);

/// True iff p maps the edge set onto itself (preserving adjacency and
/// nonadjacency). Independent of the search above: checks every pair.
bool is_automorphism(const Graph &g, const Permutation &p);

/// Largest k in [0, n] such that Aut(g) is i-homogeneous for every i <= k.
unsigned max_homogeneity(const Graph &g, std::uint64_t cap = kDefaultUniverseCap);

} // namespace ftspare

#endif
