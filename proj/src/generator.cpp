#include "fast/generator.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fast {

Tournament gen_transitive(int n) {
  if (n < 1) throw std::invalid_argument("gen_transitive requires n >= 1");
  return Tournament(n);  // fresh tournaments are transitive
}

Tournament gen_planted(int n, long long reversals, std::uint64_t seed) {
  Tournament t = gen_transitive(n);
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (reversals < 0 || reversals > pairs)
    throw std::invalid_argument("gen_planted: reversal count out of range");

  std::vector<std::pair<Vertex, Vertex>> all;
  all.reserve(pairs);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);

  // partial Fisher-Yates: the first `reversals` entries are a sample without
  // replacement
  SplitMix64 rng(seed);
  for (long long i = 0; i < reversals; ++i) {
    const long long j = i + static_cast<long long>(rng.below(pairs - i));
    std::swap(all[i], all[j]);
    t.orient(all[i].second, all[i].first);
  }
  return t;
}

Tournament gen_uniform(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_uniform requires n >= 1");
  Tournament t(n);
  SplitMix64 rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.next() & 1)
        t.orient(u, v);
      else
        t.orient(v, u);
    }
  return t;
}

std::uint64_t enumeration_count(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("exhaustive enumeration is limited to n <= 6");
  return 1ull << (n * (n - 1) / 2);
}

Tournament tournament_from_code(int n, std::uint64_t code) {
  if (code >= enumeration_count(n))
    throw std::invalid_argument("tournament_from_code: code out of range");
  Tournament t(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (code >> bit & 1)
        t.orient(u, v);
      else
        t.orient(v, u);
    }
  return t;
}

Tournament generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Transitive:
      return gen_transitive(spec.n);
    case Family::Planted:
      return gen_planted(spec.n, spec.planted_k, spec.seed);
    case Family::Uniform:
      return gen_uniform(spec.n, spec.seed);
    case Family::Exhaustive:
      return tournament_from_code(spec.n, spec.seed);
  }
  throw std::invalid_argument("generate: unknown family");
}

std::uint64_t orientation_digest(const Tournament& t) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001B3ull;
  };
  mix(static_cast<std::uint64_t>(t.size()));
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = 0; v < t.size(); ++v) mix(u != v && t.has_arc(u, v) ? 1 : 0);
  return h;
}

}  // namespace fast
