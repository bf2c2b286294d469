#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fast/tournament.hpp"
#include "fast/windows.hpp"

namespace fast {

/// One configuration of the layered dynamic program, in the explicit form
/// used by tests: location i, the members of C(i) already placed in
/// locations 0..i-1, and the backward arcs among the placed vertices.
struct DpState {
  int location = 0;
  std::vector<Vertex> placed_candidates;  // sorted ascending
  long long cost = 0;
};

/// Places v at state.location. The cost grows by the arcs from v into
/// placed_candidates and into P(location); the successor subset is
/// C(location+1) intersected with placed_candidates u {v}. Returns nullopt
/// when the branch dies: some vertex entering P(location+1) was never
/// placed. v must be an unplaced member of C(location).
std::optional<DpState> dp_transition(const DpState& state, Vertex v,
                                     const WindowFamily& wf, const Tournament& t);

struct DpStats {
  std::size_t states = 0;            // stored across all layers
  std::size_t max_layer_states = 0;
  std::size_t budget_pruned = 0;     // expansions dropped by the cost budget
  bool cardinality_ok = true;        // |S| == i - |P(i)| for every stored state
  bool table_bound_ok = true;        // per-layer states <= 2^|C(i)|
};

struct DpResult {
  bool feasible = false;
  long long cost = -1;
  std::optional<LinearOrder> order;
  /// Set when infeasibility may be due to the budget rather than the windows.
  bool budget_exceeded = false;
  DpStats stats;
};

/// Minimum backward-arc count over all orders sigma with sigma^-1(i) in C(i)
/// for every location, plus one achieving order; infeasible when no such
/// order exists. With a budget only results of cost <= budget are reported:
/// internally every state's cost counts the backward arcs already committed
/// by the placed set (arcs within it plus arcs entering it from unplaced
/// vertices). That count never decreases along a path and meets the plain
/// backward-arc count at the final layer, so cutting states above the budget
/// discards no order of total cost <= budget, and per-subset minimization is
/// unchanged (the two accountings differ by a per-subset constant).
DpResult dp_solve(const Tournament& t, const WindowFamily& wf,
                  std::optional<long long> budget = std::nullopt);

}  // namespace fast
