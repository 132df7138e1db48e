#ifndef FTSPARE_PERM_HPP
#define FTSPARE_PERM_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ftspare {

/// Permutation of {0..degree-1}, stored as its image list.
///
/// The action convention throughout is the right action a^x: points are
/// written to the left, so compose(p, q) applies p first and q second,
/// matching a^(pq) = (a^p)^q.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<unsigned> images); // validates bijection

  static Permutation identity(unsigned degree);

  /// Internal fast path: the image list must already be a bijection.
  static Permutation unchecked(std::vector<unsigned> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  const std::vector<unsigned> &images() const { return images_; }
  unsigned operator()(unsigned point) const { return images_[point]; }
  bool is_identity() const;

  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<unsigned> images_;
};

/// apply(compose(p, q), a) == apply(q, apply(p, a)) for every point a.
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);
unsigned apply(const Permutation &p, unsigned point);

/// Image of a vertex bitmask under p.
std::uint64_t apply_mask(const Permutation &p, std::uint64_t mask);

/// Parse 1-based disjoint-cycle notation, e.g. "(1 2 3 4 5 6 7)" or
/// "(2 3 5)(4 7 6)". Points omitted from the text are fixed; the empty
/// string and "()" denote the identity. Separators are spaces or commas.
Permutation parse_cycles(std::string_view text, unsigned degree);

/// Inverse of parse_cycles: 1-based disjoint cycles, fixed points omitted,
/// cycles ordered by smallest member; identity prints as "()".
std::string format_cycles(const Permutation &p);

} // namespace ftspare

#endif
