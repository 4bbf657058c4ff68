#pragma once

#include <cstdint>
#include <string_view>

#include "pair014/graph.hpp"

namespace pair014 {

/// SplitMix64 (Steele, Lea, Flood). Bit-exact across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// G(n,p): pairs u<v in lexicographic order, one SplitMix64 draw each; the
/// draw x becomes (x >> 11) * 2^-53 and the edge is kept iff that is < p.
/// The comparison is done exactly against the rational p.
Graph gen_gnp(int n, const Rational& p, std::uint64_t seed);

/// Parses a probability written as a decimal ("0.9", "1", ".25") or a
/// fraction ("9/10") into an exact rational. Throws Error if outside [0,1].
Rational parse_probability(std::string_view text);

}  // namespace pair014
