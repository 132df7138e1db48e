#ifndef FTSPARE_COMBINATORICS_HPP
#define FTSPARE_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace ftspare {

/// C(n, k), exact for n <= 64 (the largest value, C(64,32), fits in 64 bits).
std::uint64_t binomial(unsigned n, unsigned k);

/// n * (n-1) * ... * (n-k+1), saturating at `limit` to avoid overflow.
/// Returns a value > limit (namely limit + 1) once the product exceeds it.
std::uint64_t falling_factorial_capped(unsigned n, unsigned k, std::uint64_t limit);

/// First k-subset of {0..n-1} in lexicographic order: {0, 1, ..., k-1}.
std::vector<unsigned> first_ksubset(unsigned k);

/// Advance a k-subset of {0..n-1} to its lexicographic successor in place.
/// Returns false when the input was the last subset.
bool next_ksubset(std::vector<unsigned> &s, unsigned n);

/// Lexicographic rank of a k-subset of {0..n-1} (0-based).
std::uint64_t ksubset_rank(const std::vector<unsigned> &s, unsigned n);

/// Inverse of ksubset_rank.
std::vector<unsigned> ksubset_unrank(std::uint64_t rank, unsigned n, unsigned k);

/// Colexicographic rank of the subset given as a bitmask; used to index
/// bitmap visited-tables without hashing.
std::uint64_t mask_rank_colex(std::uint64_t mask);

} // namespace ftspare

#endif
