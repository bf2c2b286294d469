#include "fast/windows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fast {

namespace {

// Exact ceil(sqrt(x)) for x >= 0.
long long ceil_sqrt(long long x) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r >= x) --r;  // r*r < x <= (r+1)*(r+1)
  while ((r + 1) * (r + 1) < x) ++r;
  return x == 0 ? 0 : r + 1;
}

}  // namespace

Parameters derive_parameters(int k) {
  if (k < 1) throw std::invalid_argument("derive_parameters requires k >= 1");
  Parameters p;
  p.k = k;
  p.t = static_cast<int>(ceil_sqrt(9LL * k));  // ceil(3*sqrt(k))
  p.d = 4 * p.t;
  return p;
}

std::vector<Vertex> WindowFamily::prefix(int location) const {
  std::vector<Vertex> members;
  for (int i = 0; i <= location; ++i)
    members.insert(members.end(), prefix_entrants[i].begin(), prefix_entrants[i].end());
  std::sort(members.begin(), members.end());
  return members;
}

int WindowFamily::max_candidate_size() const {
  int best = 0;
  for (int i = 0; i < n; ++i) best = std::max(best, static_cast<int>(candidates[i].size()));
  return best;
}

WindowFamily build_windows(const Tournament& t, const std::vector<Vertex>& bad,
                           const Parameters& p) {
  const int n = t.size();
  WindowFamily wf;
  wf.n = n;
  wf.params = p;
  wf.bad = bad;
  std::sort(wf.bad.begin(), wf.bad.end());
  wf.indegree = indegrees(t);

  std::vector<std::uint8_t> is_bad(n, 0);
  for (Vertex v : wf.bad) is_bad[v] = 1;

  // Bucket vertices by indegree; each bucket stays sorted by id.
  std::vector<std::vector<Vertex>> by_indegree(n);
  for (Vertex v = 0; v < n; ++v) by_indegree[wf.indegree[v]].push_back(v);

  wf.candidates.assign(n + 1, {});
  wf.prefix_entrants.assign(n + 1, {});
  wf.prefix_sizes.assign(n + 1, 0);

  int prefix_size = 0;
  for (int i = 0; i <= n; ++i) {
    if (i >= 1) {
      const int entering = i - 1 - p.d;  // indegree leaving the window bottom
      if (entering >= 0 && entering < n)
        for (Vertex v : by_indegree[entering])
          if (!is_bad[v]) wf.prefix_entrants[i].push_back(v);
      prefix_size += static_cast<int>(wf.prefix_entrants[i].size());
    }
    wf.prefix_sizes[i] = prefix_size;

    auto& cand = wf.candidates[i];
    cand = wf.bad;
    const int lo = std::max(0, i - p.d);
    const int hi = std::min(n - 1, i + p.d);
    for (int g = lo; g <= hi; ++g)
      for (Vertex v : by_indegree[g])
        if (!is_bad[v]) cand.push_back(v);
    std::sort(cand.begin(), cand.end());
  }
  return wf;
}

GuardVerdict guard_bounds(const std::vector<Vertex>& bad, const WindowFamily& wf,
                          const Parameters& p) {
  const long long b = static_cast<long long>(bad.size());
  const long long t = p.t;
  const long long k = p.k;

  if (wf.max_candidate_size() > b + 4LL * p.d + 1) return GuardVerdict::Reject;
  // t^2*|B|/(4t + 2|B|) <= k rearranged to stay in integers
  if (t * t > 2 * k && b * (t * t - 2 * k) > 4 * k * t) return GuardVerdict::Reject;
  return GuardVerdict::Accept;
}

}  // namespace fast
