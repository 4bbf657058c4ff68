#include "pair014/generate.hpp"

#include <charconv>
#include <string>

namespace pair014 {

Graph gen_gnp(int n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw Error("gen_gnp: n must be at least 1");
  if (p < 0 || p > 1) throw Error("gen_gnp: p must lie in [0,1]");
  SplitMix64 rng(seed);
  // (x >> 11) / 2^53 < num / den  <=>  (x >> 11) * den < num * 2^53
  const __int128 threshold = static_cast<__int128>(p.numerator()) << 53;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const __int128 draw = static_cast<__int128>(rng.next() >> 11) * p.denominator();
      if (draw < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Rational parse_probability(std::string_view text) {
  auto fail = [&]() -> Error { return Error("invalid probability '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (s.empty()) return v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw fail();
    return v;
  };

  if (text.find_first_of("+-") != std::string_view::npos) throw fail();
  Rational p;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0 || slash == 0) throw fail();
    p = Rational(parse_int(text.substr(0, slash)), den);
  } else {
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || frac.size() > 17) throw fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    p = Rational(parse_int(whole)) + Rational(parse_int(frac), scale);
  }
  if (p < 0 || p > 1) throw fail();
  return p;
}

}  // namespace pair014
