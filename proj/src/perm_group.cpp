#include "ftspare/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "ftspare/combinatorics.hpp"
#include "ftspare/errors.hpp"

namespace ftspare {

// ------------------------------------------------------------ chain

/// Deterministic Schreier-Sims stabilizer chain.
///
/// Orbits and transversals are append-only, so once a Schreier generator
/// sifts to the identity it stays sifted (deeper orbits only grow and no
/// representative is ever replaced). Each level therefore tracks the
/// rectangle of (orbit point, generator) pairs it has already verified and
/// re-entry scans only the new pairs. Strong generators found while
/// verifying level i are inserted at levels i+1..j only, which keeps the
/// orbit of the level being scanned fixed and every sift exact.
struct PermGroup::Chain {
  struct Level {
    unsigned base = 0;
    std::vector<Permutation> gens;
    std::vector<int> where;               // point -> transversal index, -1 if outside orbit
    std::vector<unsigned> orbit;          // discovery order, base first
    std::vector<Permutation> transversal; // transversal[i] maps base to orbit[i]
    std::vector<Permutation> transversal_inv;
    std::size_t scanned_orbit = 0;        // verified rectangle bounds
    std::size_t scanned_gens = 0;
  };

  unsigned degree;
  std::vector<Level> levels;
  Bignum group_order{1};

  explicit Chain(unsigned deg, const std::vector<Permutation> &generators) : degree(deg) {
    // base points are pairwise distinct, so there are at most `degree`
    // levels; reserving keeps Level references stable across insertions
    levels.reserve(degree);
    for (const auto &g : generators)
      if (!g.is_identity()) add_strong_gen(g, 0);
    for (std::size_t i = levels.size(); i-- > 0;) complete_level(i);
    for (const auto &lv : levels)
      group_order *= static_cast<std::uint32_t>(lv.orbit.size());
  }

  // compose/invert without bijection revalidation; chain-internal only
  static Permutation mul(const Permutation &a, const Permutation &b) {
    std::vector<unsigned> im(a.degree());
    for (unsigned i = 0; i < a.degree(); ++i) im[i] = b(a(i));
    return Permutation::unchecked(std::move(im));
  }

  static Permutation inv(const Permutation &a) {
    std::vector<unsigned> im(a.degree());
    for (unsigned i = 0; i < a.degree(); ++i) im[a(i)] = i;
    return Permutation::unchecked(std::move(im));
  }

  static unsigned min_moved_point(const Permutation &g) {
    for (unsigned p = 0; p < g.degree(); ++p)
      if (g(p) != p) return p;
    return g.degree();
  }

  // Insert g as a strong generator at every level in [lo, j], where j is
  // the deepest level whose earlier base points g all fixes. Creates a new
  // level when g fixes every existing base point.
  void add_strong_gen(const Permutation &g, std::size_t lo) {
    std::size_t j = lo;
    while (j < levels.size() && g(levels[j].base) == levels[j].base) ++j;
    if (j == levels.size()) {
      Level lv;
      lv.base = min_moved_point(g);
      levels.push_back(std::move(lv));
    }
    for (std::size_t l = lo; l <= j; ++l) levels[l].gens.push_back(g);
  }

  void extend_orbit(Level &lv) {
    if (lv.orbit.empty()) {
      lv.where.assign(degree, -1);
      lv.orbit.push_back(lv.base);
      lv.transversal.push_back(Permutation::identity(degree));
      lv.transversal_inv.push_back(Permutation::identity(degree));
      lv.where[lv.base] = 0;
    }
    for (std::size_t idx = 0; idx < lv.orbit.size(); ++idx) {
      for (const auto &s : lv.gens) {
        unsigned img = s(lv.orbit[idx]);
        if (lv.where[img] < 0) {
          lv.where[img] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(img);
          lv.transversal.push_back(mul(lv.transversal[idx], s));
          lv.transversal_inv.push_back(inv(lv.transversal.back()));
        }
      }
    }
  }

  // Sift g through levels [from, end); returns the residue and the level at
  // which sifting stopped (levels.size() if it ran through the whole chain).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      unsigned img = g(levels[l].base);
      int idx = levels[l].where[img];
      if (idx < 0) return {std::move(g), l};
      g = mul(g, levels[l].transversal_inv[idx]);
    }
    return {std::move(g), levels.size()};
  }

  // Establish the stabilizer property at level i; levels deeper than i must
  // already satisfy it. Only pairs outside the verified rectangle are
  // scanned, so repeated entry stays cheap.
  void complete_level(std::size_t i) {
    Level &lv = levels[i];
    extend_orbit(lv);
    std::size_t o_hi = lv.orbit.size(), g_hi = lv.gens.size();
    if (lv.scanned_orbit == o_hi && lv.scanned_gens == g_hi) return;
    for (std::size_t idx = 0; idx < o_hi; ++idx) {
      for (std::size_t si = 0; si < g_hi; ++si) {
        if (idx < lv.scanned_orbit && si < lv.scanned_gens) continue;
        unsigned img = lv.gens[si](lv.orbit[idx]);
        Permutation schreier =
            mul(mul(lv.transversal[idx], lv.gens[si]), lv.transversal_inv[lv.where[img]]);
        auto [residue, j] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        add_strong_gen(residue, i + 1);
        if (j >= levels.size()) j = levels.size() - 1;
        for (std::size_t l = j + 1; l-- > i + 1;) complete_level(l);
      }
    }
    lv.scanned_orbit = o_hi;
    lv.scanned_gens = g_hi;
  }
};

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree > 64) throw InvalidRange("permutation groups are limited to degree 64");
  for (const auto &g : generators_)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));
}

PermGroup::PermGroup(const PermGroup &other)
    : degree_(other.degree_), generators_(other.generators_) {}

PermGroup &PermGroup::operator=(const PermGroup &other) {
  if (this != &other) {
    degree_ = other.degree_;
    generators_ = other.generators_;
    chain_.reset(); // rebuilt lazily
  }
  return *this;
}

PermGroup::~PermGroup() = default;

const PermGroup::Chain &PermGroup::chain() const {
  std::call_once(chain_once_, [this] { chain_ = std::make_unique<Chain>(degree_, generators_); });
  return *chain_;
}

const Bignum &PermGroup::order() const { return chain().group_order; }

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_) throw DegreeMismatch("contains: degree mismatch");
  auto [residue, level] = chain().strip(p, 0);
  return residue.is_identity();
}

std::vector<unsigned> PermGroup::base() const {
  std::vector<unsigned> b;
  for (const auto &lv : chain().levels) b.push_back(lv.base);
  return b;
}

PermGroup PermGroup::trivial(unsigned degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(unsigned degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<unsigned> t(degree), c(degree);
    for (unsigned i = 0; i < degree; ++i) t[i] = c[i] = i;
    std::swap(t[0], t[1]);
    for (unsigned i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    gens.emplace_back(std::move(t));
    if (degree >= 3) gens.emplace_back(std::move(c));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(unsigned degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<unsigned> c(degree);
    for (unsigned i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    gens.emplace_back(std::move(c));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::dihedral(unsigned degree) {
  if (degree < 3) throw InvalidRange("dihedral: need degree >= 3");
  std::vector<unsigned> rot(degree), refl(degree);
  for (unsigned i = 0; i < degree; ++i) {
    rot[i] = (i + 1) % degree;
    refl[i] = (degree - i) % degree;
  }
  return PermGroup(degree, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup parse_generator_file(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t first = line.find_first_not_of(' ');
    if (first != std::string::npos && line[first] != '#')
      lines.push_back(line.substr(first));
    pos = nl + 1;
  }
  if (lines.empty() || lines[0].rfind("degree", 0) != 0)
    throw ParseError("generator file: first line must be \"degree n\"");
  unsigned degree = 0;
  try {
    degree = static_cast<unsigned>(std::stoul(lines[0].substr(6)));
  } catch (...) {
    throw ParseError("generator file: malformed degree line");
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i < lines.size(); ++i)
    gens.push_back(parse_cycles(lines[i], degree));
  return PermGroup(degree, std::move(gens));
}

std::string emit_generator_file(const PermGroup &g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto &p : g.generators()) out += format_cycles(p) + "\n";
  return out;
}

// ------------------------------------------------------------ orbits

std::size_t OrbitDecomposition::universe_size() const {
  std::size_t total = 0;
  for (const auto &orbit : orbits) total += orbit.size();
  return total;
}

std::vector<unsigned> orbit_of_point(const PermGroup &g, unsigned a) {
  if (a >= g.degree()) throw InvalidPoint("orbit_of_point: point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<unsigned> orbit{a};
  seen[a] = true;
  for (std::size_t idx = 0; idx < orbit.size(); ++idx)
    for (const auto &s : g.generators()) {
      unsigned img = s(orbit[idx]);
      if (!seen[img]) {
        seen[img] = true;
        orbit.push_back(img);
      }
    }
  return orbit;
}

OrbitDecomposition orbits_on_points(const PermGroup &g) {
  OrbitDecomposition dec{OrbitDecomposition::Universe::points, 1, {}};
  std::vector<bool> covered(g.degree(), false);
  for (unsigned a = 0; a < g.degree(); ++a) {
    if (covered[a]) continue;
    std::vector<std::vector<unsigned>> orbit;
    for (unsigned p : orbit_of_point(g, a)) {
      covered[p] = true;
      orbit.push_back({p});
    }
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

namespace {

// BFS closure of a subset-mask under the generators; discovery order.
// stop_at lets single-orbit-size checks bail out as soon as the orbit is
// known to cover the whole universe.
std::vector<std::uint64_t> subset_orbit_masks(const PermGroup &g, std::uint64_t start,
                                              std::uint64_t cap,
                                              std::uint64_t stop_at = UINT64_MAX) {
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> orbit{start};
  for (std::size_t idx = 0; idx < orbit.size() && orbit.size() < stop_at; ++idx)
    for (const auto &s : g.generators()) {
      std::uint64_t img = apply_mask(s, orbit[idx]);
      if (seen.insert(img).second) {
        if (orbit.size() + 1 > cap)
          throw OrbitTooLarge("subset orbit exceeds the configured cap of " + std::to_string(cap));
        orbit.push_back(img);
        if (orbit.size() >= stop_at) break;
      }
    }
  return orbit;
}

void check_subset_in_range(const PermGroup &g, const VertexSet &s) {
  for (unsigned v : s.members())
    if (v >= g.degree()) throw InvalidPoint("subset member out of range");
}

struct TupleHash {
  std::size_t operator()(const std::vector<unsigned> &t) const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned v : t) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<std::vector<unsigned>> tuple_orbit(const PermGroup &g,
                                               const std::vector<unsigned> &start,
                                               std::uint64_t cap,
                                               std::uint64_t stop_at = UINT64_MAX) {
  std::unordered_set<std::vector<unsigned>, TupleHash> seen{start};
  std::vector<std::vector<unsigned>> orbit{start};
  for (std::size_t idx = 0; idx < orbit.size() && orbit.size() < stop_at; ++idx)
    for (const auto &s : g.generators()) {
      std::vector<unsigned> img(orbit[idx].size());
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = s(orbit[idx][i]);
      if (seen.insert(img).second) {
        if (orbit.size() + 1 > cap)
          throw OrbitTooLarge("tuple orbit exceeds the configured cap of " + std::to_string(cap));
        orbit.push_back(std::move(img));
        if (orbit.size() >= stop_at) break;
      }
    }
  return orbit;
}

void check_tuple(const PermGroup &g, const std::vector<unsigned> &t) {
  std::uint64_t mask = 0;
  for (unsigned v : t) {
    if (v >= g.degree()) throw InvalidPoint("tuple entry out of range");
    if ((mask >> v) & 1u) throw InvalidTuple("tuple entries must be distinct");
    mask |= std::uint64_t{1} << v;
  }
}

} // namespace

std::vector<VertexSet> orbit_of_subset(const PermGroup &g, const VertexSet &s, std::uint64_t cap) {
  check_subset_in_range(g, s);
  std::vector<VertexSet> out;
  for (std::uint64_t m : subset_orbit_masks(g, s.mask(), cap))
    out.push_back(VertexSet::from_mask(m));
  return out;
}

std::vector<std::vector<unsigned>> orbit_of_tuple(const PermGroup &g,
                                                  const std::vector<unsigned> &t,
                                                  std::uint64_t cap) {
  check_tuple(g, t);
  return tuple_orbit(g, t, cap);
}

std::uint64_t count_orbits_on_ksubsets(const PermGroup &g, unsigned k, std::uint64_t cap) {
  unsigned n = g.degree();
  if (k > n) throw InvalidRange("count_orbits_on_ksubsets: k > degree");
  std::uint64_t total = binomial(n, k);
  if (total > cap)
    throw UniverseTooLarge("k-subset universe has " + std::to_string(total) +
                           " elements, cap is " + std::to_string(cap));
  if (k == 0) return 1;
  std::vector<bool> visited(total, false);
  std::uint64_t orbits = 0;
  std::vector<unsigned> subset = first_ksubset(k);
  do {
    std::uint64_t start_mask = 0;
    for (unsigned v : subset) start_mask |= std::uint64_t{1} << v;
    if (visited[mask_rank_colex(start_mask)]) continue;
    ++orbits;
    // closure from this representative, marking the visited bitmap
    std::vector<std::uint64_t> frontier{start_mask};
    visited[mask_rank_colex(start_mask)] = true;
    for (std::size_t idx = 0; idx < frontier.size(); ++idx)
      for (const auto &s : g.generators()) {
        std::uint64_t img = apply_mask(s, frontier[idx]);
        std::uint64_t r = mask_rank_colex(img);
        if (!visited[r]) {
          visited[r] = true;
          frontier.push_back(img);
        }
      }
  } while (next_ksubset(subset, n));
  return orbits;
}

OrbitDecomposition orbits_on_ksubsets(const PermGroup &g, unsigned k, std::uint64_t cap) {
  unsigned n = g.degree();
  if (k > n) throw InvalidRange("orbits_on_ksubsets: k > degree");
  std::uint64_t total = binomial(n, k);
  if (total > cap) throw UniverseTooLarge("k-subset universe exceeds cap");
  OrbitDecomposition dec{OrbitDecomposition::Universe::subsets, k, {}};
  if (k == 0) {
    dec.orbits.push_back({{}});
    return dec;
  }
  std::vector<bool> visited(total, false);
  std::vector<unsigned> subset = first_ksubset(k);
  do {
    std::uint64_t start_mask = 0;
    for (unsigned v : subset) start_mask |= std::uint64_t{1} << v;
    if (visited[mask_rank_colex(start_mask)]) continue;
    std::vector<std::vector<unsigned>> orbit;
    for (std::uint64_t m : subset_orbit_masks(g, start_mask, cap)) {
      visited[mask_rank_colex(m)] = true;
      orbit.push_back(VertexSet::from_mask(m).members());
    }
    dec.orbits.push_back(std::move(orbit));
  } while (next_ksubset(subset, n));
  return dec;
}

std::uint64_t count_orbits_on_ktuples(const PermGroup &g, unsigned k, std::uint64_t cap) {
  unsigned n = g.degree();
  if (k > n) throw InvalidRange("count_orbits_on_ktuples: k > degree");
  std::uint64_t total = falling_factorial_capped(n, k, cap);
  if (total > cap)
    throw UniverseTooLarge("k-tuple universe exceeds cap of " + std::to_string(cap));
  if (k == 0) return 1;
  std::unordered_set<std::vector<unsigned>, TupleHash> visited;
  visited.reserve(total);
  std::uint64_t orbits = 0;
  // odometer over all k-tuples of distinct points, lexicographic
  std::vector<unsigned> tuple(first_ksubset(k));
  auto next_tuple = [&]() -> bool { return std::next_permutation(tuple.begin(), tuple.end()) ||
                                           next_ksubset(tuple, n); };
  // start from the lexicographically first tuple of the first subset
  do {
    if (visited.contains(tuple)) continue;
    ++orbits;
    for (auto &t : tuple_orbit(g, tuple, cap)) visited.insert(std::move(t));
  } while (next_tuple());
  return orbits;
}

bool is_k_homogeneous(const PermGroup &g, unsigned k, std::uint64_t cap) {
  unsigned n = g.degree();
  if (k > n) throw InvalidRange("is_k_homogeneous: k > degree");
  std::uint64_t total = binomial(n, k);
  if (total > cap) throw OrbitTooLarge("k-subset universe exceeds cap");
  std::uint64_t start = k ? (~std::uint64_t{0} >> (64 - k)) : 0; // {0..k-1}
  return subset_orbit_masks(g, start, cap, total).size() == total;
}

bool is_k_transitive(const PermGroup &g, unsigned k, std::uint64_t cap) {
  unsigned n = g.degree();
  if (k > n) throw InvalidRange("is_k_transitive: k > degree");
  std::uint64_t total = falling_factorial_capped(n, k, cap);
  if (total > cap) throw OrbitTooLarge("k-tuple universe exceeds cap");
  return tuple_orbit(g, first_ksubset(k), cap, total).size() == total;
}

MonotonicityCheck orbit_count_monotonicity_check(const PermGroup &g, unsigned m, unsigned k,
                                                 std::uint64_t cap) {
  if (m > k || m + k > g.degree())
    throw InvalidRange("orbit_count_monotonicity_check: need 0 <= m <= k and m + k <= degree");
  std::uint64_t om = count_orbits_on_ksubsets(g, m, cap);
  std::uint64_t ok = count_orbits_on_ksubsets(g, k, cap);
  return {om, ok, ok >= om};
}

} // namespace ftspare
