#pragma once

#include "fast/tournament.hpp"

namespace fast {

enum class OracleMethod { Enumeration, SubsetDp };

struct OracleResult {
  long long opt_size = 0;
  LinearOrder order;
  OracleMethod method = OracleMethod::Enumeration;
};

/// Exact optimum by scanning all n! orders; the returned order is the
/// lexicographically smallest optimal one. Refuses n > 8.
OracleResult enumerate_opt(const Tournament& t);

/// Exact optimum by dynamic programming over all vertex subsets:
/// best[S] = min over v in S of best[S \ {v}] + |arcs from v into S \ {v}|,
/// placing v last among S so each backward arc is paid exactly once.
/// Refuses n > 20.
OracleResult subset_dp_opt(const Tournament& t);

}  // namespace fast
