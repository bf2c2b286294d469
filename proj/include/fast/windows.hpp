#pragma once

#include <vector>

#include "fast/tournament.hpp"

namespace fast {

/// Trial budget k and the thresholds derived from it: the suspect threshold
/// t = ceil(3*sqrt(k)) and the indegree window radius d = 4t. Taking d as 4t
/// rather than ceil(12*sqrt(k)) keeps d >= 4t exact under integer rounding.
struct Parameters {
  int k = 0;
  int t = 0;
  int d = 0;
};

/// Throws std::invalid_argument for k < 1; k = 0 is special-cased by the
/// solver.
Parameters derive_parameters(int k);

/// Candidate and prefix sets per location. candidates[i] holds
/// C(i) = B u {v : i-d <= indegree(v) <= i+d} sorted by vertex id;
/// prefix_entrants[i] holds P(i) \ P(i-1), the non-bad vertices of indegree
/// exactly i-1-d. Both run one entry past the last location: entry n closes
/// the dynamic program (every vertex is then placed).
struct WindowFamily {
  int n = 0;
  Parameters params;
  std::vector<Vertex> bad;    // sorted ascending
  std::vector<int> indegree;  // per vertex
  std::vector<std::vector<Vertex>> candidates;
  std::vector<std::vector<Vertex>> prefix_entrants;
  std::vector<int> prefix_sizes;  // |P(i)|

  /// P(location), materialized and sorted.
  std::vector<Vertex> prefix(int location) const;

  /// max |C(i)| over locations 0..n-1.
  int max_candidate_size() const;
};

/// Builds the window family for the given bad set and parameters. The bad
/// set is expected to come from bad_vertices with threshold p.t.
WindowFamily build_windows(const Tournament& t, const std::vector<Vertex>& bad,
                           const Parameters& p);

enum class GuardVerdict { Accept, Reject };

/// Sound early rejection: a feedback arc set of size <= k forces both
/// |C(i)| <= |B| + 4d + 1 for every i and t^2*|B| <= k*(4t + 2|B|), so a
/// violation certifies that no such set exists.
GuardVerdict guard_bounds(const std::vector<Vertex>& bad, const WindowFamily& wf,
                          const Parameters& p);

}  // namespace fast
