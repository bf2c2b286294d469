#include "fast/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fast {

OracleResult enumerate_opt(const Tournament& t) {
  const int n = t.size();
  if (n > 8) throw std::invalid_argument("enumerate_opt refuses n > 8; use subset_dp_opt");

  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  long long best = std::numeric_limits<long long>::max();
  std::vector<Vertex> best_perm;
  do {
    long long cost = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (t.has_arc(perm[i], perm[j])) ++cost;
    if (cost < best) {
      best = cost;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return OracleResult{best, LinearOrder(std::move(best_perm)), OracleMethod::Enumeration};
}

OracleResult subset_dp_opt(const Tournament& t) {
  const int n = t.size();
  if (n > 20) throw std::invalid_argument("subset_dp_opt refuses n > 20");

  std::vector<std::uint32_t> out_mask(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && t.has_arc(u, v)) out_mask[u] |= 1u << v;

  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  std::vector<std::uint32_t> best(full + 1, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::uint8_t> last(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    for (std::uint32_t rest = set; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint32_t without = set & ~(1u << v);
      const std::uint32_t cost =
          best[without] + static_cast<std::uint32_t>(std::popcount(out_mask[v] & without));
      if (cost < best[set]) {
        best[set] = cost;
        last[set] = static_cast<std::uint8_t>(v);
      }
    }
  }

  std::vector<Vertex> order(n);
  std::uint32_t set = full;
  for (int loc = n - 1; loc >= 0; --loc) {
    const Vertex v = last[set];
    order[loc] = v;
    set &= ~(1u << v);
  }
  return OracleResult{best[full], LinearOrder(std::move(order)), OracleMethod::SubsetDp};
}

}  // namespace fast
