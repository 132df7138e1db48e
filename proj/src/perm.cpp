#include "ftspare/perm.hpp"

#include <algorithm>
#include <cctype>

#include "ftspare/errors.hpp"

namespace ftspare {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidPermutation("image list is not a bijection of {0.." +
                               std::to_string(images_.size()) + "-1}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<unsigned> im(degree);
  for (unsigned i = 0; i < degree; ++i) im[i] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::unchecked(std::vector<unsigned> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()));
  std::vector<unsigned> im(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) im[i] = q(p(i));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation &p) {
  std::vector<unsigned> im(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) im[p(i)] = i;
  return Permutation(std::move(im));
}

unsigned apply(const Permutation &p, unsigned point) {
  if (point >= p.degree()) throw InvalidPoint("apply: point out of range");
  return p(point);
}

std::uint64_t apply_mask(const Permutation &p, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask != 0) {
    unsigned b = static_cast<unsigned>(__builtin_ctzll(mask));
    out |= std::uint64_t{1} << p(b);
    mask &= mask - 1;
  }
  return out;
}

Permutation parse_cycles(std::string_view text, unsigned degree) {
  std::vector<unsigned> im(degree);
  for (unsigned i = 0; i < degree; ++i) im[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("cycle notation: expected '('");
    ++pos;
    std::vector<unsigned> cycle;
    for (;;) {
      skip_ws();
      while (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
        ++pos;
      if (pos >= text.size()) throw ParseError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("cycle notation: unexpected character '" + std::string(1, text[pos]) + "'");
      unsigned long val = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        val = val * 10 + (text[pos] - '0');
        if (val > degree) throw ParseError("cycle notation: point " + std::to_string(val) +
                                           " exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (val == 0) throw ParseError("cycle notation: points are 1-based");
      unsigned point = static_cast<unsigned>(val - 1);
      if (used[point])
        throw ParseError("cycle notation: point " + std::to_string(val) + " repeated");
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      im[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::string format_cycles(const Permutation &p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (unsigned start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    out.push_back('(');
    unsigned v = start;
    bool first = true;
    do {
      if (!first) out.push_back(' ');
      out += std::to_string(v + 1);
      done[v] = true;
      v = p(v);
      first = false;
    } while (v != start);
    out.push_back(')');
  }
  if (out.empty()) out = "()";
  return out;
}

} // namespace ftspare
