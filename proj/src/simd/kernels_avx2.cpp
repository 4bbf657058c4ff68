// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include "pair014/simd/bitset_kernels.hpp"

#include <immintrin.h>

namespace pair014::simd::avx2 {
namespace {

// Nibble-lookup popcount (Mula): per-byte counts via vpshufb, summed into
// 64-bit lanes with vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

template <typename Combine, typename Tail>
std::uint64_t count_reduce(std::size_t n, Combine combine, Tail tail) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(combine(i)), _mm256_setzero_si256()));
  }
  std::uint64_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(_mm_popcnt_u64(tail(i)));
  return total;
}

std::uint64_t popcount(const Word* a, std::size_t n) {
  return count_reduce(n, [&](std::size_t i) { return load(a + i); },
                      [&](std::size_t i) { return a[i]; });
}

std::uint64_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  return count_reduce(
      n, [&](std::size_t i) { return _mm256_and_si256(load(a + i), load(b + i)); },
      [&](std::size_t i) { return a[i] & b[i]; });
}

std::uint64_t andnot2_popcount(const Word* mask, const Word* a, const Word* b, std::size_t n) {
  return count_reduce(
      n,
      [&](std::size_t i) {
        // _mm256_andnot_si256(x, y) = ~x & y
        const __m256i either = _mm256_or_si256(load(a + i), load(b + i));
        return _mm256_andnot_si256(either, load(mask + i));
      },
      [&](std::size_t i) { return mask[i] & ~a[i] & ~b[i]; });
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_assign(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

bool intersects(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace

const KernelTable& table() {
  static constexpr KernelTable kTable{Backend::avx2,    popcount,   and_popcount,
                                      andnot2_popcount, or_assign,  and_assign,
                                      andnot_assign,    intersects};
  return kTable;
}

}  // namespace pair014::simd::avx2
