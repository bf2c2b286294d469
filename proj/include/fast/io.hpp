#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fast/solver.hpp"
#include "fast/tournament.hpp"

namespace fast {

inline constexpr const char* kSolverVersion = "fast-solver 1.0.0";

/// Parse failure with 1-based line/column coordinates (0 for whole-file
/// problems such as an unreadable path).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Instance text: header "FAST v1 n=<n>" (trailing annotation tokens after
/// the count are ignored), then n rows of n characters over {0,1}; entry
/// (i,j) is 1 iff arc i->j. Antisymmetry violations, diagonal ones, stray
/// characters and shape errors each raise a distinct ParseError.
Tournament parse_instance(std::istream& in);
Tournament parse_instance(const std::string& text);
Tournament load_instance(const std::filesystem::path& path);

/// The annotation, when given, is appended to the header line.
std::string emit_instance(const Tournament& t, const std::string& annotation = "");

struct Solution {
  long long opt_size = 0;
  std::vector<Vertex> order;  // vertex ids by location
  ArcSet fas;
  std::vector<std::string> provenance;
};

/// Wraps a solver result, recording the solver version and the trial log as
/// provenance lines.
Solution make_solution(const SolveResult& result);

std::string emit_solution(const Solution& s);
Solution parse_solution(std::istream& in);
Solution parse_solution(const std::string& text);
Solution load_solution(const std::filesystem::path& path);

/// Checks the solution against the instance: order is a permutation of the
/// vertices, fas is exactly the backward arc set of order, opt_size matches,
/// and removing fas leaves the tournament acyclic. On failure `reason`
/// (when non-null) names the first violated invariant.
bool verify_solution(const Tournament& t, const Solution& s, std::string* reason = nullptr);

/// Voter rankings over n alternatives. The voter count must be odd so
/// pairwise majorities never tie.
struct RankingProfile {
  int alternatives = 0;
  std::vector<std::vector<Vertex>> rankings;
};

/// Profile text: "m n" on the first line, then m lines of n space-separated
/// alternative ids (each a permutation of 0..n-1).
RankingProfile parse_rankings(std::istream& in);
RankingProfile parse_rankings(const std::string& text);
RankingProfile load_rankings(const std::filesystem::path& path);

/// Arc u->v iff a strict majority of voters rank u before v. Throws for an
/// even number of voters or a non-permutation ranking.
Tournament majority_tournament(const RankingProfile& profile);

}  // namespace fast
