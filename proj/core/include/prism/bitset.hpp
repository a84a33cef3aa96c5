#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>

namespace prism {

/// Fixed-width bit vector with inline storage for up to 128 bits.
///
/// Conditions over a state space of n states need n bits; relations need
/// n*n. Law-checking universes are tiny (n <= 4), so the inline buffer
/// avoids heap traffic in the hot path. Bits past size() are kept zero.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t nbits) : nbits_(nbits), nwords_((nbits + 63) / 64) {
    if (nwords_ > kInline) heap_ = std::make_unique<std::uint64_t[]>(nwords_);
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] = 0;
  }

  Bitset(const Bitset& other) : nbits_(other.nbits_), nwords_(other.nwords_) {
    if (nwords_ > kInline) heap_ = std::make_unique<std::uint64_t[]>(nwords_);
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] = other.words()[w];
  }

  Bitset(Bitset&&) noexcept = default;
  Bitset& operator=(Bitset&& other) noexcept = default;

  Bitset& operator=(const Bitset& other) {
    if (this != &other) *this = Bitset(other);
    return *this;
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words()[i / 64] >> (i % 64)) & 1u; }

  void set(std::size_t i) { words()[i / 64] |= std::uint64_t{1} << (i % 64); }

  void reset(std::size_t i) { words()[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  void set_all() {
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] = ~std::uint64_t{0};
    mask_tail();
  }

  bool none() const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if (words()[w]) return false;
    return true;
  }

  bool any() const { return !none(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < nwords_; ++w) c += std::popcount(words()[w]);
    return c;
  }

  bool operator==(const Bitset& other) const {
    if (nbits_ != other.nbits_) return false;
    for (std::size_t w = 0; w < nwords_; ++w)
      if (words()[w] != other.words()[w]) return false;
    return true;
  }

  bool operator!=(const Bitset& other) const { return !(*this == other); }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if (words()[w] & ~other.words()[w]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t w = 0; w < nwords_; ++w)
      if (words()[w] & other.words()[w]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] |= other.words()[w];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] &= other.words()[w];
    return *this;
  }

  /// Set difference: clears every bit that is set in `other`.
  Bitset& operator-=(const Bitset& other) {
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] &= ~other.words()[w];
    return *this;
  }

  void flip_all() {
    for (std::size_t w = 0; w < nwords_; ++w) words()[w] = ~words()[w];
    mask_tail();
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  /// Calls f(i) for every set bit, in increasing order.
  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < nwords_; ++w) {
      std::uint64_t word = words()[w];
      while (word) {
        const int b = std::countr_zero(word);
        f(w * 64 + static_cast<std::size_t>(b));
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t w = 0; w < nwords_; ++w) {
      h ^= words()[w];
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::size_t kInline = 2;

  std::uint64_t* words() { return heap_ ? heap_.get() : inline_; }
  const std::uint64_t* words() const { return heap_ ? heap_.get() : inline_; }

  void mask_tail() {
    if (nbits_ % 64 != 0 && nwords_ > 0)
      words()[nwords_ - 1] &= (~std::uint64_t{0}) >> (64 - nbits_ % 64);
  }

  std::size_t nbits_ = 0;
  std::size_t nwords_ = 0;
  std::uint64_t inline_[kInline] = {0, 0};
  std::unique_ptr<std::uint64_t[]> heap_;
};

}  // namespace prism
