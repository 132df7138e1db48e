#include "ftspare/autgroup.hpp"

#include <algorithm>

#include "ftspare/errors.hpp"

namespace ftspare {

namespace {

// Stable equitable coloring: start from one class, iteratively split by the
// multiset of neighbor colors until no class splits. The result is an
// automorphism invariant, so the search below may only map vertices within
// a color class.
std::vector<unsigned> equitable_colors(const Graph &g) {
  unsigned n = g.order();
  std::vector<unsigned> colors(n, 0);
  std::size_t classes = n ? 1 : 0;
  for (;;) {
    std::vector<std::pair<std::vector<unsigned>, unsigned>> sigs(n);
    for (unsigned v = 0; v < n; ++v) {
      std::vector<unsigned> sig{colors[v]};
      for (unsigned w = 0; w < n; ++w)
        if (g.adjacent(v, w)) sig.push_back(colors[w]);
      std::sort(sig.begin() + 1, sig.end());
      sigs[v] = {std::move(sig), v};
    }
    auto sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::size_t new_classes = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i == 0 || sorted[i].first != sorted[i - 1].first) ++new_classes;
      colors[sorted[i].second] = static_cast<unsigned>(new_classes - 1);
    }
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return colors;
}

struct AutSearch {
  const Graph &g;
  unsigned n;
  std::vector<unsigned> colors;
  std::vector<unsigned> assignment;
  std::uint64_t used = 0;

  explicit AutSearch(const Graph &graph)
      : g(graph), n(graph.order()), colors(equitable_colors(graph)), assignment(n) {}

  bool consistent(unsigned v, unsigned w) const {
    if (colors[w] != colors[v]) return false;
    for (unsigned j = 0; j < v; ++j)
      if (g.adjacent(v, j) != g.adjacent(w, assignment[j])) return false;
    return true;
  }

  // Extend the partial map (vertices 0..v-1 assigned) to a full
  // automorphism; first success wins, candidates tried in ascending order.
  bool extend(unsigned v) {
    if (v == n) return true;
    for (unsigned w = 0; w < n; ++w) {
      if ((used >> w) & 1u) continue;
      if (!consistent(v, w)) continue;
      assignment[v] = w;
      used |= std::uint64_t{1} << w;
      if (extend(v + 1)) return true;
      used &= ~(std::uint64_t{1} << w);
    }
    return false;
  }

  // First automorphism fixing 0..i-1 pointwise and mapping i to target.
  std::optional<Permutation> find(unsigned i, unsigned target) {
    used = 0;
    for (unsigned j = 0; j < i; ++j) {
      assignment[j] = j;
      used |= std::uint64_t{1} << j;
    }
    if (!consistent(i, target)) return std::nullopt;
    assignment[i] = target;
    used |= std::uint64_t{1} << target;
    if (!extend(i + 1)) return std::nullopt;
    return Permutation(std::vector<unsigned>(assignment.begin(), assignment.end()));
  }
};

} // namespace

PermGroup automorphism_generators(const Graph &g) {
  unsigned n = g.order();
  // complete and empty graphs carry the full symmetric group; skip the
  // search and return its two standard generators
  if (g.is_complete() || g.edge_count() == 0) return PermGroup::symmetric(n);
  AutSearch search(g);
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < n; ++i) {
    // orbit of i under the generators that fix 0..i-1 (exactly those found
    // at this level; deeper ones fix i as well)
    std::vector<Permutation> level_gens;
    std::uint64_t orbit = std::uint64_t{1} << i;
    auto close_orbit = [&] {
      for (;;) {
        std::uint64_t next = orbit;
        for (const auto &p : level_gens) next |= apply_mask(p, next);
        if (next == orbit) return;
        orbit = next;
      }
    };
    for (unsigned u = i + 1; u < n; ++u) {
      if ((orbit >> u) & 1u) continue;
      auto p = search.find(i, u);
      if (!p) continue;
      level_gens.push_back(*p);
      gens.push_back(std::move(*p));
      close_orbit();
    }
  }
  return PermGroup(n, std::move(gens));
}

AutomorphismGroupResult automorphism_group(const Graph &g, std::uint64_t cap) {
  PermGroup group = automorphism_generators(g);
  unsigned n = g.order();
  std::vector<std::optional<bool>> homogeneity(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    try {
      homogeneity[k] = is_k_homogeneous(group, k, cap);
    } catch (const CapExceeded &) {
      homogeneity[k] = std::nullopt;
    }
  }
  bool vt = n == 0 || orbit_of_point(group, 0).size() == n;
  Bignum order = group.order();
  return {std::move(group), std::move(order), vt, std::move(homogeneity)};
}

bool is_automorphism(const Graph &g, const Permutation &p) {
  if (p.degree() != g.order()) throw DegreeMismatch("is_automorphism: degree mismatch");
  for (unsigned u = 0; u < g.order(); ++u)
    for (unsigned v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

unsigned max_homogeneity(const Graph &g, std::uint64_t cap) {
  PermGroup group = automorphism_generators(g);
  unsigned best = 0;
  for (unsigned k = 1; k <= g.order(); ++k) {
    try {
      if (!is_k_homogeneous(group, k, cap)) break;
    } catch (const CapExceeded &) {
      break; // unknown beyond the cap; stop conservatively
    }
    best = k;
  }
  return best;
}

} // namespace ftspare
