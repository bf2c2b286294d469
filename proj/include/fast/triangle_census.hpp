#pragma once

#include <cstdint>
#include <vector>

#include "fast/tournament.hpp"

namespace fast {

/// Per-arc directed-triangle counts (Step 1 of the solver). An arc is a
/// suspect if it lies on at least one triangle and a major suspect if it lies
/// on at least `threshold` of them.
class TriangleCensus {
 public:
  int size() const { return n_; }

  /// Triangles through the arc (u,v); 0 when (u,v) is not an arc.
  std::uint32_t arc_count(Vertex u, Vertex v) const {
    return counts_[static_cast<std::size_t>(u) * n_ + v];
  }

  long long total_triangles() const { return total_; }
  bool all_zero() const { return total_ == 0; }

  /// Arcs on at least one triangle, sorted by tail then head.
  std::vector<Arc> suspect_arcs() const { return arcs_with_count_at_least(1); }

  /// Arcs on at least `threshold` triangles, sorted by tail then head.
  std::vector<Arc> major_suspect_arcs(int threshold) const;

 private:
  friend TriangleCensus count_triangles(const Tournament& t);

  std::vector<Arc> arcs_with_count_at_least(std::uint32_t bound) const;

  int n_ = 0;
  long long total_ = 0;
  std::vector<std::uint32_t> counts_;
};

/// Counts, for every arc, the directed triangles through it by scanning every
/// vertex triple once. O(n^3).
TriangleCensus count_triangles(const Tournament& t);

/// Vertices incident with at least `threshold` major-suspect arcs, sorted
/// ascending. An arc contributes to both of its endpoints' tallies. The same
/// `threshold` defines the major suspects. Throws for threshold < 1.
std::vector<Vertex> bad_vertices(const TriangleCensus& census, int threshold);

}  // namespace fast
