#include "fast/tournament.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fast {

Tournament::Tournament(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("tournament needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) adj_[static_cast<std::size_t>(u) * n + v] = 1;
}

void Tournament::orient(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw std::invalid_argument("orient: invalid vertex pair");
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
}

LinearOrder::LinearOrder(std::vector<Vertex> vertex_by_location)
    : at_(std::move(vertex_by_location)) {
  const int n = size();
  pos_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = at_[i];
    if (v < 0 || v >= n || pos_[v] != -1)
      throw std::invalid_argument("linear order is not a permutation");
    pos_[v] = i;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Vertex> at(n);
  for (int i = 0; i < n; ++i) at[i] = i;
  return LinearOrder(std::move(at));
}

int indegree(const Tournament& t, Vertex v) {
  if (v < 0 || v >= t.size()) throw std::invalid_argument("indegree: vertex out of range");
  int deg = 0;
  for (Vertex u = 0; u < t.size(); ++u)
    if (u != v && t.has_arc(u, v)) ++deg;
  return deg;
}

std::vector<int> indegrees(const Tournament& t) {
  std::vector<int> deg(t.size(), 0);
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = u + 1; v < t.size(); ++v) {
      if (t.has_arc(u, v))
        ++deg[v];
      else
        ++deg[u];
    }
  return deg;
}

namespace {

void check_order(const Tournament& t, const LinearOrder& order) {
  if (order.size() != t.size())
    throw std::invalid_argument("order is not a permutation of the tournament's vertices");
}

}  // namespace

ArcSet backward_arcs(const Tournament& t, const LinearOrder& order) {
  check_order(t, order);
  ArcSet arcs;
  for (Vertex u = 0; u < t.size(); ++u)
    for (Vertex v = 0; v < t.size(); ++v)
      if (u != v && t.has_arc(u, v) && order.position_of(u) > order.position_of(v))
        arcs.emplace_back(u, v);
  return arcs;
}

long long backward_arc_count(const Tournament& t, const LinearOrder& order) {
  check_order(t, order);
  long long count = 0;
  // location pairs i > j; arc from the later-placed vertex to the earlier one
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (t.has_arc(order.vertex_at(i), order.vertex_at(j))) ++count;
  return count;
}

bool is_acyclic(const Tournament& t) {
  return backward_arc_count(t, indegree_order(t)) == 0;
}

bool verify_fas(const Tournament& t, const ArcSet& fas) {
  const int n = t.size();
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : fas) {
    if (u < 0 || v < 0 || u >= n || v >= n || !t.has_arc(u, v))
      throw std::invalid_argument("verify_fas: arc not present in the tournament");
    removed[static_cast<std::size_t>(u) * n + v] = 1;
  }

  std::vector<int> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && t.has_arc(u, v) && !removed[static_cast<std::size_t>(u) * n + v]) ++indeg[v];

  // Iterated source extraction; the extraction sequence is a topological
  // certificate of acyclicity.
  std::vector<Vertex> sources;
  std::vector<std::uint8_t> extracted(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) sources.push_back(v);
  int count = 0;
  while (!sources.empty()) {
    const Vertex u = sources.back();
    sources.pop_back();
    extracted[u] = 1;
    ++count;
    for (Vertex v = 0; v < n; ++v)
      if (v != u && !extracted[v] && t.has_arc(u, v) && !removed[static_cast<std::size_t>(u) * n + v])
        if (--indeg[v] == 0) sources.push_back(v);
  }
  return count == n;
}

LinearOrder indegree_order(const Tournament& t) {
  const std::vector<int> deg = indegrees(t);
  std::vector<Vertex> at(t.size());
  for (int i = 0; i < t.size(); ++i) at[i] = i;
  std::sort(at.begin(), at.end(), [&deg](Vertex a, Vertex b) {
    return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
  });
  return LinearOrder(std::move(at));
}

long long indegree_error_sum(const Tournament& t, const LinearOrder& order) {
  check_order(t, order);
  const std::vector<int> deg = indegrees(t);
  long long sum = 0;
  for (Vertex v = 0; v < t.size(); ++v) sum += std::abs(order.position_of(v) - deg[v]);
  return sum;
}

}  // namespace fast
