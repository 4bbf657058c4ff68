#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pair014/simd/bitset_kernels.hpp"

namespace pair014 {

/// Fixed-capacity set of vertex indices packed into 64-bit words.
class VertexSet {
 public:
  using Word = simd::Word;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
    return s;
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t word_count() const { return words_.size(); }

  void insert(std::size_t v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(std::size_t v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  std::size_t count() const { return simd::popcount(words_); }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest member, or capacity() when empty.
  std::size_t first() const { return next(0); }
  /// Lowest member >= from, or capacity() when none.
  std::size_t next(std::size_t from) const {
    if (from >= capacity_) return capacity_;
    std::size_t wi = from >> 6;
    Word w = words_[wi] & (~Word{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return capacity_;
      w = words_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    simd::or_assign(words_, o.words_);
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    simd::and_assign(words_, o.words_);
    return *this;
  }
  /// this &= ~o
  VertexSet& subtract(const VertexSet& o) {
    simd::andnot_assign(words_, o.words_);
    return *this;
  }

  std::size_t intersection_count(const VertexSet& o) const {
    return simd::and_popcount(words_, o.words_);
  }
  bool intersects(const VertexSet& o) const { return simd::intersects(words_, o.words_); }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

/// |mask \ (a ∪ b)|
inline std::size_t count_outside_both(const VertexSet& mask, const VertexSet& a,
                                      const VertexSet& b) {
  return simd::andnot2_popcount(mask.words(), a.words(), b.words());
}

}  // namespace pair014
