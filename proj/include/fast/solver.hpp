#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fast/tournament.hpp"

namespace fast {

enum class TrialOutcome { RejectedByGuard, DpInfeasible, DpCostExceedsK, Success };

const char* to_string(TrialOutcome outcome);

/// Diagnostics for one value of k tried by the solver.
struct TrialRecord {
  int k = 0;
  TrialOutcome outcome = TrialOutcome::DpInfeasible;
  int t = 0;
  int d = 0;
  std::size_t bad_count = 0;
  std::size_t max_candidate = 0;
  std::size_t dp_states = 0;
};

struct SolveResult {
  long long opt_size = 0;
  LinearOrder order;
  ArcSet fas;  // backward arcs of order; |fas| == opt_size
  std::vector<TrialRecord> trials;
};

struct SolveOptions {
  /// Stop after trying this k; solve returns nullopt once it is passed.
  std::optional<int> max_k;
  /// Hard cap on max |C(i)|; exceeding it rejects the trial like the guard.
  /// Defaults to the guard bound |B| + 4d + 1.
  std::optional<std::size_t> candidate_cap;
};

/// Tries k = 0, 1, 2, ... until the first success; the k that succeeds is
/// the exact optimum. k = 0 is the acyclicity test; each k >= 1 runs the
/// census / bad-set / window construction, the rejection guards, and the
/// layered dynamic program with cost budget k. Returns nullopt only when
/// max_k is set and passed.
std::optional<SolveResult> solve(const Tournament& t, const SolveOptions& opts = {});

/// Single-k variant: does the tournament admit a feedback arc set of size
/// <= k? On yes, the result carries a minimum feedback arc set (of size
/// exactly the optimum). Throws for k < 0.
std::optional<SolveResult> decide_k(const Tournament& t, int k);

}  // namespace fast
