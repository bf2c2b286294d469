#include "fast/solver.hpp"

#include <cassert>
#include <stdexcept>

#include "fast/dp_engine.hpp"
#include "fast/triangle_census.hpp"
#include "fast/windows.hpp"

namespace fast {

const char* to_string(TrialOutcome outcome) {
  switch (outcome) {
    case TrialOutcome::RejectedByGuard:
      return "rejected-by-guard";
    case TrialOutcome::DpInfeasible:
      return "dp-infeasible";
    case TrialOutcome::DpCostExceedsK:
      return "dp-cost-exceeds-k";
    case TrialOutcome::Success:
      return "success";
  }
  return "unknown";
}

namespace {

// Outcome of one k-trial; `solution` is set exactly on Success.
struct Trial {
  TrialRecord record;
  std::optional<SolveResult> solution;
};

SolveResult assemble(const Tournament& t, long long cost, LinearOrder order) {
  ArcSet fas = backward_arcs(t, order);
  assert(static_cast<long long>(fas.size()) == cost);
  assert(verify_fas(t, fas));
  return SolveResult{cost, std::move(order), std::move(fas), {}};
}

Trial run_trial(const Tournament& t, const TriangleCensus& census, int k,
                const SolveOptions& opts) {
  Trial trial;
  trial.record.k = k;

  const Parameters p = derive_parameters(k);
  trial.record.t = p.t;
  trial.record.d = p.d;

  const std::vector<Vertex> bad = bad_vertices(census, p.t);
  trial.record.bad_count = bad.size();

  const WindowFamily wf = build_windows(t, bad, p);
  trial.record.max_candidate = static_cast<std::size_t>(wf.max_candidate_size());

  if (guard_bounds(bad, wf, p) == GuardVerdict::Reject) {
    trial.record.outcome = TrialOutcome::RejectedByGuard;
    return trial;
  }
  const std::size_t cap =
      opts.candidate_cap ? *opts.candidate_cap : bad.size() + 4 * static_cast<std::size_t>(p.d) + 1;
  if (trial.record.max_candidate > cap) {
    trial.record.outcome = TrialOutcome::RejectedByGuard;
    return trial;
  }

  DpResult dp = dp_solve(t, wf, k);
  trial.record.dp_states = dp.stats.states;
  if (dp.feasible) {
    assert(dp.cost <= k);
    trial.record.outcome = TrialOutcome::Success;
    trial.solution = assemble(t, dp.cost, std::move(*dp.order));
    return trial;
  }
  trial.record.outcome =
      dp.budget_exceeded ? TrialOutcome::DpCostExceedsK : TrialOutcome::DpInfeasible;
  return trial;
}

}  // namespace

std::optional<SolveResult> solve(const Tournament& t, const SolveOptions& opts) {
  std::vector<TrialRecord> trials;

  if (opts.max_k && *opts.max_k < 0) return std::nullopt;
  if (is_acyclic(t)) {
    SolveResult result = assemble(t, 0, indegree_order(t));
    trials.push_back(TrialRecord{0, TrialOutcome::Success, 0, 0, 0, 0, 0});
    result.trials = std::move(trials);
    return result;
  }
  trials.push_back(TrialRecord{0, TrialOutcome::DpCostExceedsK, 0, 0, 0, 0, 0});

  const TriangleCensus census = count_triangles(t);
  for (int k = 1;; ++k) {
    if (opts.max_k && k > *opts.max_k) return std::nullopt;
    Trial trial = run_trial(t, census, k, opts);
    trials.push_back(trial.record);
    if (trial.solution) {
      trial.solution->trials = std::move(trials);
      return std::move(trial.solution);
    }
  }
}

std::optional<SolveResult> decide_k(const Tournament& t, int k) {
  if (k < 0) throw std::invalid_argument("decide_k requires k >= 0");
  if (is_acyclic(t)) {
    SolveResult result = assemble(t, 0, indegree_order(t));
    result.trials.push_back(TrialRecord{0, TrialOutcome::Success, 0, 0, 0, 0, 0});
    return result;
  }
  if (k == 0) return std::nullopt;

  const TriangleCensus census = count_triangles(t);
  Trial trial = run_trial(t, census, k, SolveOptions{});
  if (!trial.solution) return std::nullopt;
  trial.solution->trials.push_back(trial.record);
  return std::move(trial.solution);
}

}  // namespace fast
