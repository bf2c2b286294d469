#pragma once

#include <cstdint>

#include "fast/tournament.hpp"

namespace fast {

/// SplitMix64 (Steele, Lea and Flood's 64-bit generator). Pure integer
/// arithmetic, so streams are identical on every platform; a seed pins an
/// instance bit for bit.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound), bound >= 1, by 128-bit multiply-shift.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

enum class Family { Transitive, Planted, Uniform, Exhaustive };

/// A reproducible instance description: the same GenSpec always yields the
/// identical tournament. For Exhaustive, `seed` is the enumeration code.
struct GenSpec {
  Family family = Family::Uniform;
  int n = 0;
  long long planted_k = 0;  // Planted only
  std::uint64_t seed = 0;
};

/// Arc i->j iff i < j.
Tournament gen_transitive(int n);

/// Transitive tournament with `reversals` distinct arcs reversed; reversing
/// them back certifies a feedback arc set of that size, so the optimum is at
/// most `reversals`.
Tournament gen_planted(int n, long long reversals, std::uint64_t seed);

/// Every pair's direction drawn independently and equiprobably.
Tournament gen_uniform(int n, std::uint64_t seed);

/// 2^{n(n-1)/2}, the number of labeled tournaments; refuses n > 6.
std::uint64_t enumeration_count(int n);

/// Tournament number `code` in the fixed enumeration: bit b of code orients
/// pair b (pairs (u,v) with u < v in lexicographic order) as u->v when set
/// and v->u when clear.
Tournament tournament_from_code(int n, std::uint64_t code);

/// Streams all labeled tournaments on n vertices exactly once; n <= 6.
template <typename Fn>
void for_each_tournament(int n, Fn&& fn) {
  const std::uint64_t count = enumeration_count(n);
  for (std::uint64_t code = 0; code < count; ++code) fn(tournament_from_code(n, code));
}

Tournament generate(const GenSpec& spec);

/// FNV-1a over n and the orientation matrix; digest equality across two runs
/// certifies generator determinism.
std::uint64_t orientation_digest(const Tournament& t);

}  // namespace fast
