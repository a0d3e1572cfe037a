#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cordial {

/// Fixed-length bit vector. Bit 0 is printed leftmost.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_mask(std::size_t size, std::uint64_t mask) {
    BitVector b(size);
    if (size > 0) {
      b.words_[0] = size >= 64 ? mask : (mask & ((std::uint64_t{1} << size) - 1));
    }
    return b;
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const auto bit = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= bit;
    } else {
      words_[i / 64] &= ~bit;
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Low 64 bits; only meaningful when size() <= 64.
  std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {

inline std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Smallest y > x with popcount(y) == k, or 0 when none fits below 2^n.
inline std::uint64_t next_with_popcount(std::uint64_t x, int k, std::size_t n) {
  const std::uint64_t limit = low_mask(n);
  if (x == limit) return 0;
  std::uint64_t y = x + 1;
  while (std::popcount(y) > k) {
    const std::uint64_t low = y & (~y + 1);
    if (y > limit - low) return 0;
    y += low;
  }
  for (int need = k - std::popcount(y); need > 0; --need) {
    y |= (~y) & (y + 1);
  }
  return (y & ~limit) != 0 ? 0 : y;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail
}  // namespace cordial
