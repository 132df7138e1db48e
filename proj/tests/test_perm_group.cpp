#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ftspare/combinatorics.hpp"
#include "ftspare/errors.hpp"
#include "ftspare/perm_group.hpp"
#include "ftspare/theorem_lab.hpp"
#include "oracles.hpp"

using namespace ftspare;

namespace {

PermGroup f21() {
  return PermGroup(7, {parse_cycles("(1 2 3 4 5 6 7)", 7), parse_cycles("(2 3 5)(4 7 6)", 7)});
}

PermGroup c4_rotation() { return PermGroup(4, {parse_cycles("(1 2 3 4)", 4)}); }

PermGroup random_group(std::mt19937 &rng, unsigned degree, unsigned ngens) {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < ngens; ++i) {
    std::vector<unsigned> im(degree);
    for (unsigned j = 0; j < degree; ++j) im[j] = j;
    std::shuffle(im.begin(), im.end(), rng);
    gens.emplace_back(im);
  }
  return PermGroup(degree, std::move(gens));
}

} // namespace

TEST_CASE("group orders") {
  CHECK(f21().order() == 21);
  CHECK(PermGroup::trivial(5).order() == 1);
  PermGroup s4(4, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(PermGroup::symmetric(7).order() == 5040);
  CHECK(PermGroup::cyclic(7).order() == 7);
  CHECK(PermGroup::dihedral(4).order() == 8);
  CHECK(PermGroup::dihedral(6).order() == 12);
  CHECK(PermGroup::trivial(0).order() == 1);
}

TEST_CASE("chain order matches brute-force closure") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned degree = 1 + rng() % 7;
    PermGroup g = random_group(rng, degree, 1 + rng() % 2);
    auto elements = oracles::brute_force_group_elements(g.generators(), degree);
    CHECK(g.order() == elements.size());
  }
  auto f = f21();
  CHECK(oracles::brute_force_group_elements(f.generators(), 7).size() == 21);
}

TEST_CASE("membership via the chain") {
  PermGroup g = f21();
  Permutation x = parse_cycles("(1 2 3 4 5 6 7)", 7);
  Permutation y = parse_cycles("(2 3 5)(4 7 6)", 7);
  CHECK(g.contains(Permutation::identity(7)));
  CHECK(g.contains(compose(x, y)));
  CHECK(g.contains(inverse(compose(y, x))));
  CHECK(!g.contains(parse_cycles("(1 2)", 7)));
  for (const auto &elem : oracles::brute_force_group_elements(g.generators(), 7))
    CHECK(g.contains(Permutation(std::vector<unsigned>(elem.begin(), elem.end()))));
}

TEST_CASE("large symmetric group order") {
  CHECK(PermGroup::symmetric(62).order() == Bignum::factorial(62));
  CHECK(PermGroup::symmetric(62).order().str() ==
        "31469973260387937525653122354950764088012280797258232192163168247821"
        "107200000000000000");
  CHECK(!PermGroup::symmetric(62).order().fits_u64());
  CHECK(PermGroup::symmetric(20).order() == Bignum::factorial(20));
}

TEST_CASE("orbit_of_point") {
  CHECK(orbit_of_point(c4_rotation(), 0) == std::vector<unsigned>{0, 1, 2, 3});
  CHECK(orbit_of_point(PermGroup::trivial(5), 2) == std::vector<unsigned>{2});
  PermGroup swaps(4, {parse_cycles("(1 2)(3 4)", 4)});
  CHECK(orbit_of_point(swaps, 0) == std::vector<unsigned>{0, 1});
  CHECK_THROWS_AS(orbit_of_point(swaps, 4), InvalidPoint);
}

TEST_CASE("orbit_of_subset") {
  // the order-21 group is transitive on 2-subsets of 7 points
  CHECK(orbit_of_subset(f21(), VertexSet{0, 1}).size() == 21);

  auto orbit = orbit_of_subset(c4_rotation(), VertexSet{0, 2});
  CHECK(orbit.size() == 2);
  CHECK(orbit[0] == VertexSet{0, 2});
  CHECK(orbit[1] == VertexSet{1, 3});

  CHECK(orbit_of_subset(PermGroup::trivial(5), VertexSet{1, 4}) ==
        std::vector<VertexSet>{VertexSet{1, 4}});
  CHECK_THROWS_AS(orbit_of_subset(PermGroup::trivial(3), VertexSet{5}), InvalidPoint);
  CHECK_THROWS_AS(orbit_of_subset(PermGroup::symmetric(20), VertexSet{0, 1, 2, 3, 4, 5, 6}, 1000),
                  OrbitTooLarge);
}

TEST_CASE("orbit_of_tuple") {
  PermGroup s3(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  CHECK(orbit_of_tuple(s3, {0, 1}).size() == 6);
  CHECK(orbit_of_tuple(f21(), {0, 1}).size() == 21); // half of the 42 ordered pairs
  CHECK(orbit_of_tuple(PermGroup::trivial(5), {2, 0}) ==
        std::vector<std::vector<unsigned>>{{2, 0}});
  CHECK_THROWS_AS(orbit_of_tuple(s3, {0, 0}), InvalidTuple);
  CHECK_THROWS_AS(orbit_of_tuple(s3, {0, 3}), InvalidPoint);
}

TEST_CASE("count_orbits_on_ksubsets") {
  CHECK(count_orbits_on_ksubsets(f21(), 2) == 1);
  CHECK(count_orbits_on_ksubsets(c4_rotation(), 2) == 2);
  CHECK(count_orbits_on_ksubsets(PermGroup::trivial(6), 0) == 1);
  CHECK(count_orbits_on_ksubsets(f21(), 0) == 1);
  // 35 3-subsets of 7 points split as 21 + 7 + 7 under the order-21 group
  CHECK(count_orbits_on_ksubsets(f21(), 3) == 3);
  CHECK_THROWS_AS(count_orbits_on_ksubsets(PermGroup::symmetric(40), 20, 1000), UniverseTooLarge);
  CHECK_THROWS_AS(count_orbits_on_ksubsets(PermGroup::trivial(3), 4), InvalidRange);
}

TEST_CASE("is_k_homogeneous") {
  CHECK(is_k_homogeneous(f21(), 2));
  CHECK(!is_k_homogeneous(c4_rotation(), 2));
  CHECK(is_k_homogeneous(PermGroup::dihedral(4), 3)); // Aut(C4) moves any 3-subset anywhere
  for (unsigned k = 0; k <= 7; ++k) CHECK(is_k_homogeneous(PermGroup::symmetric(7), k));
}

TEST_CASE("is_k_transitive") {
  CHECK(!is_k_transitive(f21(), 2));
  CHECK(is_k_transitive(PermGroup::symmetric(7), 2));
  CHECK(!is_k_transitive(PermGroup::trivial(3), 1));
  CHECK(is_k_transitive(PermGroup::trivial(3), 0));
  CHECK(is_k_transitive(f21(), 1)); // the 7-cycle alone is transitive on points
}

TEST_CASE("homogeneity spectra of small groups") {
  auto g = f21();
  std::vector<bool> expected_hom{true, true, true, false, false, true, true, true};
  for (unsigned k = 0; k <= 7; ++k) CHECK(is_k_homogeneous(g, k) == expected_hom[k]);
}

TEST_CASE("orbit decompositions partition their universe") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    unsigned degree = 1 + rng() % 7;
    PermGroup g = random_group(rng, degree, 1 + rng() % 2);
    unsigned k = rng() % (degree + 1);
    auto dec = orbits_on_ksubsets(g, k);
    CHECK(dec.universe_size() == binomial(degree, k));

    std::set<std::vector<unsigned>> all;
    for (const auto &orbit : dec.orbits)
      for (const auto &subset : orbit) {
        CHECK(all.insert(subset).second); // disjointness
        // closure under every generator
        for (const auto &gen : g.generators()) {
          std::vector<unsigned> img;
          for (unsigned v : subset) img.push_back(gen(v));
          std::sort(img.begin(), img.end());
          bool in_same_orbit = false;
          for (const auto &other : orbit) in_same_orbit |= other == img;
          CHECK(in_same_orbit);
        }
      }
    CHECK(all.size() == binomial(degree, k)); // coverage

    // consistency with the counting path
    CHECK(dec.orbit_count() == count_orbits_on_ksubsets(g, k));
  }
}

TEST_CASE("homogeneity equals a single orbit on k-subsets") {
  std::mt19937 rng(271);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned degree = 1 + rng() % 8;
    PermGroup g = random_group(rng, degree, 1 + rng() % 2);
    for (unsigned k = 0; k <= degree; ++k)
      CHECK(is_k_homogeneous(g, k) == (count_orbits_on_ksubsets(g, k) == 1));
  }
}

TEST_CASE("orbit sizes divide the group order") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned degree = 1 + rng() % 10;
    PermGroup g = random_group(rng, degree, 1 + rng() % 2);
    for (unsigned p = 0; p < degree; ++p)
      CHECK(g.order().divisible_by(static_cast<std::uint32_t>(orbit_of_point(g, p).size())));
  }
}

TEST_CASE("orbit count monotonicity") {
  auto check = orbit_count_monotonicity_check(f21(), 1, 2);
  CHECK(check.orbits_m == 1);
  CHECK(check.orbits_k == 1);
  CHECK(check.holds);

  check = orbit_count_monotonicity_check(f21(), 2, 3);
  CHECK(check.orbits_m == 1);
  CHECK(check.orbits_k == 3);
  CHECK(check.holds);

  check = orbit_count_monotonicity_check(PermGroup::symmetric(5), 1, 2);
  CHECK(check.orbits_m == 1);
  CHECK(check.orbits_k == 1);
  CHECK(check.holds);

  CHECK_THROWS_AS(orbit_count_monotonicity_check(f21(), 3, 2), InvalidRange);
  CHECK_THROWS_AS(orbit_count_monotonicity_check(f21(), 4, 4), InvalidRange);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned degree = 2 + rng() % 7;
    PermGroup g = random_group(rng, degree, 1 + rng() % 2);
    for (unsigned m = 0; m <= degree; ++m)
      for (unsigned k = m; m + k <= degree; ++k)
        CHECK(orbit_count_monotonicity_check(g, m, k).holds);
  }
}

TEST_CASE("corpus groups: chain order equals closure size, orbits divide order") {
  for (const auto &[name, group] : ftspare::lemma_corpus()) {
    CAPTURE(name);
    auto elements = oracles::brute_force_group_elements(group.generators(), group.degree());
    CHECK(group.order() == elements.size());
    for (unsigned p = 0; p < group.degree(); ++p)
      CHECK(group.order().divisible_by(static_cast<std::uint32_t>(orbit_of_point(group, p).size())));
  }
}

TEST_CASE("generator file round trip") {
  PermGroup g = f21();
  std::string text = emit_generator_file(g);
  PermGroup parsed = parse_generator_file(text);
  CHECK(parsed.degree() == 7);
  CHECK(parsed.order() == 21);
  CHECK(parsed.generators() == g.generators());

  CHECK_THROWS_AS(parse_generator_file("(1 2 3)\n"), ParseError);
  CHECK_THROWS_AS(parse_generator_file("degree x\n"), ParseError);
  PermGroup with_comments = parse_generator_file("# a comment\ndegree 4\n\n(1 2 3 4)\n");
  CHECK(with_comments.order() == 4);
}

TEST_CASE("group construction errors") {
  CHECK_THROWS_AS(PermGroup(3, {Permutation::identity(4)}), DegreeMismatch);
  CHECK_THROWS_AS(PermGroup(65, {}), InvalidRange);
}
