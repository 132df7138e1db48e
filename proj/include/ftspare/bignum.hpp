#ifndef FTSPARE_BIGNUM_HPP
#define FTSPARE_BIGNUM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ftspare {

/// Unsigned arbitrary-precision integer, just big enough for group orders
/// (products of transversal sizes, up to 64! here). Stored little-endian
/// in base 10^9 limbs so printing is straightforward.
class Bignum {
public:
  Bignum() : limbs_{0} {}

  Bignum(std::uint64_t v) {
    do {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    } while (v != 0);
  }

  /// Multiply in place by a small factor (fits the limb width).
  Bignum &operator*=(std::uint32_t factor) {
    std::uint64_t carry = 0;
    for (auto &limb : limbs_) {
      std::uint64_t t = static_cast<std::uint64_t>(limb) * factor + carry;
      limb = static_cast<std::uint32_t>(t % kBase);
      carry = t / kBase;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
    return *this;
  }

  bool operator==(const Bignum &other) const { return limbs_ == other.limbs_; }
  bool operator!=(const Bignum &other) const { return !(*this == other); }
  bool operator==(std::uint64_t v) const { return *this == Bignum(v); }

  bool operator<(const Bignum &other) const {
    if (limbs_.size() != other.limbs_.size())
      return limbs_.size() < other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
      if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i];
    return false;
  }

  bool fits_u64() const {
    return limbs_.size() <= 2 ||
           (limbs_.size() == 3 && !(Bignum(UINT64_MAX) < *this));
  }

  std::uint64_t as_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return v;
  }

  bool divisible_by(std::uint32_t d) const {
    std::uint64_t r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      r = (r * kBase + limbs_[i]) % d;
    return r == 0;
  }

  std::string str() const {
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  static Bignum factorial(unsigned n) {
    Bignum r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
  }

private:
  static constexpr std::uint64_t kBase = 1'000'000'000;

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

} // namespace ftspare

#endif
