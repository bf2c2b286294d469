#include "fast/dp_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace fast {

std::optional<DpState> dp_transition(const DpState& state, Vertex v,
                                     const WindowFamily& wf, const Tournament& t) {
  const int i = state.location;
  assert(i >= 0 && i < wf.n);
  const auto& cand = wf.candidates[i];
  assert(std::binary_search(cand.begin(), cand.end(), v));
  assert(!std::binary_search(state.placed_candidates.begin(), state.placed_candidates.end(), v));
  (void)cand;

  long long cost = state.cost;
  for (Vertex u : state.placed_candidates) cost += t.has_arc(v, u);
  for (Vertex u : wf.prefix(i)) cost += t.has_arc(v, u);

  std::vector<Vertex> placed = state.placed_candidates;
  placed.insert(std::upper_bound(placed.begin(), placed.end(), v), v);

  for (Vertex e : wf.prefix_entrants[i + 1])
    if (!std::binary_search(placed.begin(), placed.end(), e)) return std::nullopt;

  std::vector<Vertex> successor;
  std::set_intersection(placed.begin(), placed.end(), wf.candidates[i + 1].begin(),
                        wf.candidates[i + 1].end(), std::back_inserter(successor));
  return DpState{i + 1, std::move(successor), cost};
}

namespace {

constexpr std::uint32_t kNoIndex = 0xFFFFFFFFu;

std::uint64_t hash_words(const std::uint64_t* words, int count) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(count + 1);
  for (int w = 0; w < count; ++w) {
    std::uint64_t z = h ^ words[w];
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    h = z ^ (z >> 31);
  }
  return h;
}

// One DP layer: open-addressed map from candidate-subset masks to the
// cheapest cost seen, with the parent link for reconstruction. Duplicate
// subsets merge by minimum cost; ties keep the first-discovered parent.
class LayerTable {
 public:
  void reset(int words, std::size_t expected) {
    words_ = words;
    keys_.clear();
    costs_.clear();
    parents_.clear();
    placed_.clear();
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, kNoIndex);
    mask_ = cap - 1;
  }

  std::size_t size() const { return costs_.size(); }
  const std::uint64_t* key(std::size_t i) const { return keys_.data() + i * words_; }
  long long cost(std::size_t i) const { return costs_[i]; }

  void upsert(const std::uint64_t* key, long long cost, std::uint32_t parent,
              std::uint16_t vertex) {
    if ((size() + 1) * 10 >= slots_.size() * 7) grow();
    std::size_t slot = hash_words(key, words_) & mask_;
    while (true) {
      const std::uint32_t idx = slots_[slot];
      if (idx == kNoIndex) {
        slots_[slot] = static_cast<std::uint32_t>(size());
        keys_.insert(keys_.end(), key, key + words_);
        costs_.push_back(cost);
        parents_.push_back(parent);
        placed_.push_back(vertex);
        return;
      }
      if (std::memcmp(keys_.data() + static_cast<std::size_t>(idx) * words_, key,
                      static_cast<std::size_t>(words_) * sizeof(std::uint64_t)) == 0) {
        if (cost < costs_[idx]) {
          costs_[idx] = cost;
          parents_[idx] = parent;
          placed_[idx] = vertex;
        }
        return;
      }
      slot = (slot + 1) & mask_;
    }
  }

  std::uint32_t find(const std::uint64_t* key) const {
    std::size_t slot = hash_words(key, words_) & mask_;
    while (true) {
      const std::uint32_t idx = slots_[slot];
      if (idx == kNoIndex) return kNoIndex;
      if (std::memcmp(keys_.data() + static_cast<std::size_t>(idx) * words_, key,
                      static_cast<std::size_t>(words_) * sizeof(std::uint64_t)) == 0)
        return idx;
      slot = (slot + 1) & mask_;
    }
  }

  void take_records(std::vector<std::uint32_t>& parents, std::vector<std::uint16_t>& placed) {
    parents = std::move(parents_);
    placed = std::move(placed_);
    parents_.clear();
    placed_.clear();
  }

 private:
  void grow() {
    const std::size_t cap = slots_.size() * 2;
    slots_.assign(cap, kNoIndex);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t slot = hash_words(key(i), words_) & mask_;
      while (slots_[slot] != kNoIndex) slot = (slot + 1) & mask_;
      slots_[slot] = static_cast<std::uint32_t>(i);
    }
  }

  int words_ = 1;
  std::vector<std::uint64_t> keys_;
  std::vector<long long> costs_;
  std::vector<std::uint32_t> parents_;
  std::vector<std::uint16_t> placed_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
};

int popcount_words(const std::uint64_t* words, int count) {
  int bits = 0;
  for (int w = 0; w < count; ++w) bits += std::popcount(words[w]);
  return bits;
}

}  // namespace

DpResult dp_solve(const Tournament& t, const WindowFamily& wf,
                  std::optional<long long> budget_opt) {
  const int n = t.size();
  if (wf.n != n) throw std::invalid_argument("dp_solve: window family size mismatch");

  DpResult result;
  const long long max_cost = static_cast<long long>(n) * (n - 1) / 2;
  // Any order costs at most max_cost, so a larger budget never cuts anything.
  const bool budgeted = budget_opt.has_value() && *budget_opt < max_cost;
  const long long budget = budgeted ? *budget_opt : max_cost;
  if (budget < 0) {
    result.budget_exceeded = true;
    return result;
  }

  LayerTable cur, next;
  cur.reset(1, 1);
  {
    const std::uint64_t empty = 0;
    cur.upsert(&empty, 0, kNoIndex, 0);
  }

  // records[i]: parent index and placed vertex for every state of layer i
  std::vector<std::vector<std::uint32_t>> rec_parents(n + 1);
  std::vector<std::vector<std::uint16_t>> rec_placed(n + 1);

  result.stats.states = 1;
  result.stats.max_layer_states = 1;

  // arcs from v into the current prefix P(i), maintained as P grows
  std::vector<int> prefix_out(n, 0);

  // scratch buffers reused across layers
  std::vector<int> vertex_to_bit(n, -1);
  std::vector<std::uint64_t> adj, newmask, succ_key, entrant_mask;
  std::vector<int> by_indeg, remap;

  bool alive = true;
  for (int i = 0; i < n && alive; ++i) {
    const auto& cand = wf.candidates[i];
    const auto& cand_next = wf.candidates[i + 1];
    const int m = static_cast<int>(cand.size());
    const int m_next = static_cast<int>(cand_next.size());
    const int words = std::max(1, (m + 63) / 64);
    const int words_next = std::max(1, (m_next + 63) / 64);

    for (int b = 0; b < m; ++b) vertex_to_bit[cand[b]] = b;

    // local adjacency: bit b2 of adj[b1] set iff arc cand[b1] -> cand[b2]
    adj.assign(static_cast<std::size_t>(m) * words, 0);
    for (int b1 = 0; b1 < m; ++b1)
      for (int b2 = 0; b2 < m; ++b2)
        if (b1 != b2 && t.has_arc(cand[b1], cand[b2]))
          adj[static_cast<std::size_t>(b1) * words + (b2 >> 6)] |= 1ull << (b2 & 63);

    // map this layer's bits into the next layer's indexing; exits drop out
    remap.assign(m, -1);
    {
      std::size_t j = 0;
      for (int b = 0; b < m; ++b) {
        while (j < cand_next.size() && cand_next[j] < cand[b]) ++j;
        if (j < cand_next.size() && cand_next[j] == cand[b]) remap[b] = static_cast<int>(j);
      }
    }

    entrant_mask.assign(words, 0);
    for (Vertex e : wf.prefix_entrants[i + 1]) {
      const int b = vertex_to_bit[e];
      assert(b >= 0);  // window exits are exactly the prefix entrants
      entrant_mask[b >> 6] |= 1ull << (b & 63);
    }

    by_indeg.resize(m);
    for (int b = 0; b < m; ++b) by_indeg[b] = b;
    std::sort(by_indeg.begin(), by_indeg.end(), [&](int a, int b) {
      const int da = wf.indegree[cand[a]], db = wf.indegree[cand[b]];
      return da != db ? da < db : cand[a] < cand[b];
    });

    const int next_cardinality = (i + 1) - wf.prefix_sizes[i + 1];
    newmask.assign(words, 0);
    succ_key.assign(words_next, 0);
    next.reset(words_next, std::max<std::size_t>(cur.size(), 16));

    for (std::size_t s = 0; s < cur.size(); ++s) {
      const std::uint64_t* S = cur.key(s);
      const long long committed = cur.cost(s);
      const long long slack = budget - committed;
      for (int oi = 0; oi < m; ++oi) {
        const int b = by_indeg[oi];
        const Vertex v = cand[b];
        const long long deg_gap = wf.indegree[v] - i;
        if (deg_gap > slack) {
          // every later candidate has indegree at least this one's
          ++result.stats.budget_pruned;
          break;
        }
        if (S[b >> 6] & (1ull << (b & 63))) continue;

        for (int w = 0; w < words; ++w) newmask[w] = S[w];
        newmask[b >> 6] |= 1ull << (b & 63);

        bool dead = false;
        for (int w = 0; w < words; ++w)
          if ((newmask[w] & entrant_mask[w]) != entrant_mask[w]) {
            dead = true;
            break;
          }
        if (dead) continue;

        long long late = prefix_out[v];
        for (int w = 0; w < words; ++w)
          late += std::popcount(adj[static_cast<std::size_t>(b) * words + w] & S[w]);
        const long long cost = committed + late + deg_gap;
        if (cost > budget) {
          ++result.stats.budget_pruned;
          continue;
        }

        std::fill(succ_key.begin(), succ_key.end(), 0);
        for (int w = 0; w < words; ++w) {
          std::uint64_t bits = newmask[w];
          while (bits) {
            const int bit = (w << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            const int nb = remap[bit];
            if (nb >= 0) succ_key[nb >> 6] |= 1ull << (nb & 63);
          }
        }
        if (popcount_words(succ_key.data(), words_next) != next_cardinality)
          result.stats.cardinality_ok = false;
        next.upsert(succ_key.data(), cost, static_cast<std::uint32_t>(s),
                    static_cast<std::uint16_t>(v));
      }
    }

    for (int b = 0; b < m; ++b) vertex_to_bit[cand[b]] = -1;
    for (Vertex e : wf.prefix_entrants[i + 1])
      for (Vertex v = 0; v < n; ++v)
        if (v != e && t.has_arc(v, e)) ++prefix_out[v];

    next.take_records(rec_parents[i + 1], rec_placed[i + 1]);
    std::swap(cur, next);

    result.stats.states += cur.size();
    result.stats.max_layer_states = std::max(result.stats.max_layer_states, cur.size());
    if (m_next < 63 && cur.size() > (1ull << m_next)) result.stats.table_bound_ok = false;
    alive = cur.size() > 0;
  }

  if (!alive) {
    result.budget_exceeded = budgeted && result.stats.budget_pruned > 0;
    return result;
  }

  // terminal state: every member of C(n) placed
  const int m_final = static_cast<int>(wf.candidates[n].size());
  const int words_final = std::max(1, (m_final + 63) / 64);
  std::vector<std::uint64_t> full(words_final, 0);
  for (int b = 0; b < m_final; ++b) full[b >> 6] |= 1ull << (b & 63);
  const std::uint32_t terminal = cur.find(full.data());
  if (terminal == kNoIndex) {
    result.budget_exceeded = budgeted && result.stats.budget_pruned > 0;
    return result;
  }

  // at the final layer the committed count is the backward-arc count
  result.feasible = true;
  result.cost = cur.cost(terminal);

  std::vector<Vertex> order(n);
  std::uint32_t idx = terminal;
  for (int i = n; i >= 1; --i) {
    order[i - 1] = rec_placed[i][idx];
    idx = rec_parents[i][idx];
  }
  result.order = LinearOrder(std::move(order));
  assert(backward_arc_count(t, *result.order) == result.cost);
  return result;
}

}  // namespace fast
