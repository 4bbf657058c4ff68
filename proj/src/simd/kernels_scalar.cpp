#include "pair014/simd/bitset_kernels.hpp"

#include <bit>

namespace pair014::simd::scalar {
namespace {

std::uint64_t popcount(const Word* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::uint64_t andnot2_popcount(const Word* mask, const Word* a, const Word* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(mask[i] & ~a[i] & ~b[i]);
  return total;
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_assign(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void andnot_assign(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace

const KernelTable& table() {
  static constexpr KernelTable kTable{Backend::scalar, popcount,     and_popcount,
                                      andnot2_popcount, or_assign,  and_assign,
                                      andnot_assign,    intersects};
  return kTable;
}

}  // namespace pair014::simd::scalar
