#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ftspare/errors.hpp"
#include "ftspare/perm.hpp"

using namespace ftspare;

TEST_CASE("permutation validation") {
  CHECK_NOTHROW(Permutation({1, 0, 2}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidPermutation);
  CHECK(Permutation::identity(5).is_identity());
}

TEST_CASE("composition order matches the right action") {
  // apply(compose(p, q), a) == apply(q, apply(p, a))
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned n = 1 + rng() % 10;
    std::vector<unsigned> a(n), b(n);
    for (unsigned i = 0; i < n; ++i) a[i] = b[i] = i;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation p(a), q(b);
    Permutation pq = compose(p, q);
    for (unsigned point = 0; point < n; ++point)
      CHECK(apply(pq, point) == apply(q, apply(p, point)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
  }
}

TEST_CASE("seven-cycle wraps") {
  Permutation x = parse_cycles("(1 2 3 4 5 6 7)", 7);
  CHECK(apply(x, 6) == 0);
  CHECK(apply(x, 0) == 1);
}

TEST_CASE("the order-21 relation xy = yx^2") {
  Permutation x = parse_cycles("(1 2 3 4 5 6 7)", 7);
  Permutation y = parse_cycles("(2 3 5)(4 7 6)", 7);
  CHECK(compose(x, y) == compose(y, compose(x, x)));
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), DegreeMismatch);
}

TEST_CASE("cycle notation parsing") {
  CHECK(parse_cycles("", 5).is_identity());
  CHECK(parse_cycles("()", 5).is_identity());
  Permutation y = parse_cycles("(2 3 5)(4 7 6)", 7);
  CHECK(apply(y, 0) == 0); // the omitted point 1 stays fixed
  CHECK(apply(y, 1) == 2);
  CHECK(apply(y, 4) == 1);
  CHECK(parse_cycles("(1,2,3)", 3) == parse_cycles("(1 2 3)", 3));

  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), ParseError); // repeated point
  CHECK_THROWS_AS(parse_cycles("(1 8)", 7), ParseError);      // out of range
  CHECK_THROWS_AS(parse_cycles("(0 1)", 7), ParseError);      // 1-based
  CHECK_THROWS_AS(parse_cycles("(1 2", 7), ParseError);       // unterminated
  CHECK_THROWS_AS(parse_cycles("1 2", 7), ParseError);
}

TEST_CASE("cycle notation round trips") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = 1 + rng() % 12;
    std::vector<unsigned> im(n);
    for (unsigned i = 0; i < n; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    Permutation p(im);
    CHECK(parse_cycles(format_cycles(p), n) == p);
  }
  CHECK(format_cycles(Permutation::identity(4)) == "()");
}

TEST_CASE("apply_mask moves subsets") {
  Permutation x = parse_cycles("(1 2 3 4 5 6 7)", 7);
  CHECK(apply_mask(x, 0b0000011) == 0b0000110); // {0,1} -> {1,2}
  CHECK(apply_mask(x, 0) == 0);
}
