#include "fast/triangle_census.hpp"

#include <stdexcept>

namespace fast {

std::vector<Arc> TriangleCensus::arcs_with_count_at_least(std::uint32_t bound) const {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (u != v && counts_[static_cast<std::size_t>(u) * n_ + v] >= bound) arcs.emplace_back(u, v);
  return arcs;
}

std::vector<Arc> TriangleCensus::major_suspect_arcs(int threshold) const {
  if (threshold < 1) throw std::invalid_argument("major suspect threshold must be at least 1");
  return arcs_with_count_at_least(static_cast<std::uint32_t>(threshold));
}

TriangleCensus count_triangles(const Tournament& t) {
  const int n = t.size();
  TriangleCensus census;
  census.n_ = n;
  census.counts_.assign(static_cast<std::size_t>(n) * n, 0);

  auto bump = [&census, n](Vertex u, Vertex v) {
    ++census.counts_[static_cast<std::size_t>(u) * n + v];
  };

  // Each unordered triple is visited once; a directed 3-cycle bumps all three
  // of its arcs.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const bool ab = t.has_arc(a, b);
      for (Vertex c = b + 1; c < n; ++c) {
        const bool bc = t.has_arc(b, c);
        const bool ac = t.has_arc(a, c);
        if (ab && bc && !ac) {  // a->b->c->a
          bump(a, b);
          bump(b, c);
          bump(c, a);
          ++census.total_;
        } else if (!ab && !bc && ac) {  // a->c->b->a
          bump(a, c);
          bump(c, b);
          bump(b, a);
          ++census.total_;
        }
      }
    }
  return census;
}

std::vector<Vertex> bad_vertices(const TriangleCensus& census, int threshold) {
  if (threshold < 1) throw std::invalid_argument("bad-vertex threshold must be at least 1");
  const int n = census.size();
  std::vector<int> incident(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      // exactly one of the two cells belongs to the pair's arc
      const std::uint32_t count = census.arc_count(u, v) + census.arc_count(v, u);
      if (count >= static_cast<std::uint32_t>(threshold)) {
        ++incident[u];
        ++incident[v];
      }
    }
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < n; ++v)
    if (incident[v] >= threshold) bad.push_back(v);
  return bad;
}

}  // namespace fast
