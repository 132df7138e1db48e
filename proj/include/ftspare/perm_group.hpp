#ifndef FTSPARE_PERM_GROUP_HPP
#define FTSPARE_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "ftspare/bignum.hpp"
#include "ftspare/graph.hpp"
#include "ftspare/perm.hpp"

namespace ftspare {

/// Default cap on the size of any subset/tuple universe an orbit
/// computation is allowed to walk. Exceeding it raises an error instead of
/// truncating silently.
inline constexpr std::uint64_t kDefaultUniverseCap = 10'000'000;

/// Finitely generated permutation group of degree <= 64.
///
/// Order and membership queries go through a deterministic Schreier-Sims
/// stabilizer chain; each new base point is the smallest point moved by the
/// offending residue, so chains are reproducible. The chain is built once,
/// on first use, under an internal guard; after that all queries are
/// read-only and safe to run concurrently.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Permutation> generators);
  PermGroup(const PermGroup &other);
  PermGroup &operator=(const PermGroup &other);
  PermGroup(PermGroup &&) = default;
  PermGroup &operator=(PermGroup &&) = default;
  ~PermGroup();

  unsigned degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }

  /// Exact group order (product of transversal sizes along the chain).
  const Bignum &order() const;

  /// Membership test via sifting through the stabilizer chain.
  bool contains(const Permutation &p) const;

  /// Base points of the stabilizer chain, in chain order.
  std::vector<unsigned> base() const;

  static PermGroup trivial(unsigned degree);
  static PermGroup symmetric(unsigned degree);
  static PermGroup cyclic(unsigned degree);
  static PermGroup dihedral(unsigned degree); // degree >= 3

private:
  struct Chain;
  const Chain &chain() const;

  unsigned degree_;
  std::vector<Permutation> generators_;
  mutable std::unique_ptr<Chain> chain_;
  mutable std::once_flag chain_once_;
};

/// Partition of a universe (points, k-subsets, or k-tuples) into orbits.
/// Elements are stored uniformly as vectors of points: singletons for
/// points, sorted vectors for subsets, ordered vectors for tuples.
struct OrbitDecomposition {
  enum class Universe { points, subsets, tuples };
  Universe universe;
  unsigned k;
  std::vector<std::vector<std::vector<unsigned>>> orbits;

  std::size_t orbit_count() const { return orbits.size(); }
  std::size_t universe_size() const;
};

/// Breadth-first closure of {a} under the generators; ascending discovery
/// order, starting point first.
std::vector<unsigned> orbit_of_point(const PermGroup &g, unsigned a);

OrbitDecomposition orbits_on_points(const PermGroup &g);

/// Orbit of a k-subset under the induced action on k-subsets. Subsets come
/// back sorted, in BFS discovery order.
std::vector<VertexSet> orbit_of_subset(const PermGroup &g, const VertexSet &s,
                                       std::uint64_t cap = kDefaultUniverseCap);

/// Orbit of a tuple of distinct points under the componentwise action.
std::vector<std::vector<unsigned>> orbit_of_tuple(const PermGroup &g,
                                                  const std::vector<unsigned> &t,
                                                  std::uint64_t cap = kDefaultUniverseCap);

/// Number of orbits of the induced action on all C(n,k) k-subsets.
std::uint64_t count_orbits_on_ksubsets(const PermGroup &g, unsigned k,
                                       std::uint64_t cap = kDefaultUniverseCap);

/// Materialized decomposition of the full k-subset universe; meant for
/// small universes (tests, reports).
OrbitDecomposition orbits_on_ksubsets(const PermGroup &g, unsigned k,
                                      std::uint64_t cap = kDefaultUniverseCap);

std::uint64_t count_orbits_on_ktuples(const PermGroup &g, unsigned k,
                                      std::uint64_t cap = kDefaultUniverseCap);

/// Single orbit BFS from {0..k-1} compared against C(n,k).
bool is_k_homogeneous(const PermGroup &g, unsigned k,
                      std::uint64_t cap = kDefaultUniverseCap);

/// Single orbit BFS from (0,...,k-1) compared against n(n-1)...(n-k+1).
bool is_k_transitive(const PermGroup &g, unsigned k,
                     std::uint64_t cap = kDefaultUniverseCap);

/// Generator-list text format: first line "degree n", then one permutation
/// per line in 1-based disjoint-cycle notation. Blank lines and lines
/// starting with '#' are skipped.
PermGroup parse_generator_file(std::string_view text);
std::string emit_generator_file(const PermGroup &g);

struct MonotonicityCheck {
  std::uint64_t orbits_m;
  std::uint64_t orbits_k;
  bool holds; // orbits_k >= orbits_m
};

/// Sanity oracle: with 0 <= m <= k and m + k <= degree, a group never has
/// fewer orbits on k-subsets than on m-subsets. `holds` is expected true
/// for every group; a false result is a bug somewhere.
MonotonicityCheck orbit_count_monotonicity_check(const PermGroup &g, unsigned m, unsigned k,
                                                 std::uint64_t cap = kDefaultUniverseCap);

} // namespace ftspare

#endif
