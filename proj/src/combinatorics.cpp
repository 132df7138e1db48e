#include "ftspare/combinatorics.hpp"

#include <bit>

namespace ftspare {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (unsigned i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1; // exact: c is a binomial coefficient at every step
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t falling_factorial_capped(unsigned n, unsigned k, std::uint64_t limit) {
  if (k > n) return 0;
  std::uint64_t p = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (p > limit / (n - i) + 1) return limit + 1;
    p *= n - i;
    if (p > limit) return limit + 1;
  }
  return p;
}

std::vector<unsigned> first_ksubset(unsigned k) {
  std::vector<unsigned> s(k);
  for (unsigned i = 0; i < k; ++i) s[i] = i;
  return s;
}

bool next_ksubset(std::vector<unsigned> &s, unsigned n) {
  const unsigned k = static_cast<unsigned>(s.size());
  if (k == 0) return false;
  // rightmost element that can still move right
  unsigned i = k;
  while (i-- > 0) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (unsigned j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t ksubset_rank(const std::vector<unsigned> &s, unsigned n) {
  const unsigned k = static_cast<unsigned>(s.size());
  std::uint64_t rank = 0;
  unsigned prev = 0;
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned v = prev; v < s[i]; ++v)
      rank += binomial(n - 1 - v, k - 1 - i);
    prev = s[i] + 1;
  }
  return rank;
}

std::vector<unsigned> ksubset_unrank(std::uint64_t rank, unsigned n, unsigned k) {
  std::vector<unsigned> s(k);
  unsigned v = 0;
  for (unsigned i = 0; i < k; ++i) {
    for (;; ++v) {
      std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    s[i] = v++;
  }
  return s;
}

std::uint64_t mask_rank_colex(std::uint64_t mask) {
  std::uint64_t rank = 0;
  unsigned idx = 1;
  while (mask != 0) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
    rank += binomial(bit, idx++);
    mask &= mask - 1;
  }
  return rank;
}

} // namespace ftspare
