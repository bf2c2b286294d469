#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

namespace fast {

using Vertex = int;

/// Ordered pair (tail, head): the arc tail->head.
using Arc = std::pair<Vertex, Vertex>;
using ArcSet = std::vector<Arc>;

/// Complete orientation on n vertices: every unordered pair {u,v} carries
/// exactly one arc. Stored as a dense n x n orientation matrix so arc queries
/// are O(1). A fresh instance is transitive (arc u->v iff u < v) and orient()
/// redirects one pair at a time, so completeness and antisymmetry hold at all
/// times.
class Tournament {
 public:
  explicit Tournament(int n);

  int size() const { return n_; }

  bool has_arc(Vertex u, Vertex v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  /// Directs the pair {u,v} as u->v. Throws std::invalid_argument on u == v
  /// or an out-of-range vertex.
  void orient(Vertex u, Vertex v);

  bool operator==(const Tournament&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
};

/// Permutation of the vertices 0..n-1; vertex_at(i) is the vertex in
/// location i. Construction validates the permutation.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<Vertex> vertex_by_location);

  static LinearOrder identity(int n);

  int size() const { return static_cast<int>(at_.size()); }
  Vertex vertex_at(int location) const { return at_[location]; }
  int position_of(Vertex v) const { return pos_[v]; }

  /// Vertices listed by location.
  const std::vector<Vertex>& vertices() const { return at_; }

  bool operator==(const LinearOrder&) const = default;

 private:
  std::vector<Vertex> at_;
  std::vector<int> pos_;
};

/// Number of arcs entering v. Throws std::invalid_argument if v is out of
/// range.
int indegree(const Tournament& t, Vertex v);

/// All indegrees at once; indegrees(t)[v] == indegree(t, v).
std::vector<int> indegrees(const Tournament& t);

/// Arcs (u,v) with position(u) > position(v), sorted by tail then head.
/// Removing them from t leaves an acyclic digraph.
ArcSet backward_arcs(const Tournament& t, const LinearOrder& order);

/// |backward_arcs(t, order)| without materializing the set.
long long backward_arc_count(const Tournament& t, const LinearOrder& order);

bool is_acyclic(const Tournament& t);

/// True iff t minus fas has no directed cycle, certified by iterated source
/// extraction. Throws if some member of fas is not an arc of t.
bool verify_fas(const Tournament& t, const ArcSet& fas);

/// Vertices sorted by ascending indegree, ties by ascending vertex id. For
/// acyclic tournaments this is the unique zero-backward-arc order.
LinearOrder indegree_order(const Tournament& t);

/// Sum over v of |position(v) - indegree(v)|. For an optimal order this is
/// at most twice the minimum feedback arc set size.
long long indegree_error_sum(const Tournament& t, const LinearOrder& order);

}  // namespace fast
