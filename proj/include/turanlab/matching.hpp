#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "turanlab/construction.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

struct Matching {
  int size = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
};

namespace detail {

// Edmonds' blossom algorithm, one BFS per free vertex. O(n^3), n <= 64.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        queue_(static_cast<std::size_t>(n_)) {}

  Matching run() {
    // Greedy start.
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        for_each_vertex(g_.neighbors(v), [&](int u) {
          if (match_[v] == -1 && match_[u] == -1) {
            match_[v] = u;
            match_[u] = v;
          }
        });
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) {
        int end = find_path(v);
        while (end != -1) {
          int pv = parent_[end];
          int ppv = match_[pv];
          match_[end] = pv;
          match_[pv] = end;
          end = ppv;
        }
      }
    Matching m;
    for (int v = 0; v < n_; ++v)
      if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
    m.size = static_cast<int>(m.edges.size());
    return m;
  }

 private:
  int lca(int a, int b) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::vector<bool>& blossom, int v, int b, int child) {
    while (base_[v] != b) {
      blossom[base_[v]] = blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::vector<bool> used(static_cast<std::size_t>(n_), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used[root] = true;
    int head = 0, tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      int v = queue_[head++];
      for (VertexSet nb = g_.neighbors(v); nb; nb &= nb - 1) {
        int to = lowest(nb);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::vector<bool> blossom(static_cast<std::size_t>(n_), false);
          mark_path(blossom, v, cur, to);
          mark_path(blossom, to, cur, v);
          for (int i = 0; i < n_; ++i)
            if (blossom[base_[i]]) {
              base_[i] = cur;
              if (!used[i]) {
                used[i] = true;
                queue_[tail++] = i;
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used[match_[to]] = true;
          queue_[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_, queue_;
};

}  // namespace detail

inline Matching max_matching(const Graph& g) { return detail::Blossom(g).run(); }

inline int matching_number(const Graph& g) { return max_matching(g).size; }

inline constexpr int kMaxSubsetSearchOrder = 24;

struct Deficiency {
  int value = 0;              // max_B odd(G - B) - |B|
  VertexSet maximizer = 0;    // lowest mask attaining it
};

// Exhaustive over all 2^n vertex sets.
inline Deficiency deficiency(const Graph& g) {
  const int n = g.order();
  if (n > kMaxSubsetSearchOrder) throw SizeCap("deficiency supports at most 24 vertices");
  Deficiency best{n == 0 ? 0 : -n - 1, 0};
  const VertexSet all = g.vertices();
  for (VertexSet b = 0; b <= all; ++b) {
    int odd = 0;
    for (VertexSet c : g.components(all & ~b)) odd += popcount(c) & 1;
    int d = odd - popcount(b);
    if (d > best.value) best = {d, b};
    if (b == all) break;
  }
  return best;
}

// A witness set B such that every component of G - B has odd order.
// value = |B| + sum (|G_i| - 1) / 2 >= nu(G).
struct BergeTuttePartition {
  VertexSet witness = 0;
  std::vector<VertexSet> components;
  int value = 0;

  int singleton_count() const {
    return static_cast<int>(std::count_if(components.begin(), components.end(),
                                          [](VertexSet c) { return popcount(c) == 1; }));
  }
};

namespace detail {

// Calls fn(partition) for every B whose removal leaves only odd components.
template <class Fn>
void for_each_berge_tutte_partition(const Graph& g, Fn&& fn) {
  const VertexSet all = g.vertices();
  for (VertexSet b = 0;; ++b) {
    auto comps = g.components(all & ~b);
    bool odd = std::all_of(comps.begin(), comps.end(), [](VertexSet c) { return popcount(c) & 1; });
    if (odd) {
      BergeTuttePartition p{b, std::move(comps), popcount(b)};
      for (VertexSet c : p.components) p.value += (popcount(c) - 1) / 2;
      fn(p);
    }
    if (b == all) break;
  }
}

// B sorted ascending, compared lexicographically.
inline bool lex_less(VertexSet a, VertexSet b) {
  while (a && b) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace detail

// The partition of least value, ties broken by smallest |B| then
// lexicographically smallest B.
inline BergeTuttePartition min_berge_tutte_partition(const Graph& g) {
  if (g.order() > kMaxSubsetSearchOrder) throw SizeCap("Berge-Tutte search supports at most 24 vertices");
  std::optional<BergeTuttePartition> best;
  detail::for_each_berge_tutte_partition(g, [&](const BergeTuttePartition& p) {
    if (!best) {
      best = p;
      return;
    }
    auto key = [](const BergeTuttePartition& x) { return std::pair{x.value, popcount(x.witness)}; };
    if (key(p) < key(*best) || (key(p) == key(*best) && detail::lex_less(p.witness, best->witness)))
      best = p;
  });
  // B = V(G) always qualifies, so a partition exists.
  return *best;
}

// Partition with value <= s - 1, or nullopt exactly when G contains M_s.
inline std::optional<BergeTuttePartition> berge_tutte_witness(const Graph& g, int s) {
  if (s < 1) throw InvalidParams("s must be positive");
  BergeTuttePartition p = min_berge_tutte_partition(g);
  if (p.value <= s - 1) return p;
  return std::nullopt;
}

inline constexpr int kMaxStructureOrder = 16;

struct StructureParams {
  int tau = 0;
  int alpha = 0;
  int nu = 0;
  std::optional<int> b;  // nullopt when H contains M_s
};

inline int independence_number(const Graph& h) {
  if (h.order() > kMaxStructureOrder) throw SizeCap("independence number supports at most 16 vertices");
  int best = 0;
  const VertexSet all = h.vertices();
  for (VertexSet s = 0;; ++s) {
    bool independent = true;
    for_each_vertex(s, [&](int v) { independent = independent && !(h.neighbors(v) & s); });
    if (independent) best = std::max(best, popcount(s));
    if (s == all) break;
  }
  return best;
}

inline int vertex_cover_number(const Graph& h) {
  if (h.order() > kMaxStructureOrder) throw SizeCap("vertex cover number supports at most 16 vertices");
  int best = h.order();
  const VertexSet all = h.vertices();
  for (VertexSet s = 0;; ++s) {
    bool covers = true;
    for (auto [u, v] : h.edges()) covers = covers && ((s & bit(u)) || (s & bit(v)));
    if (covers) best = std::min(best, popcount(s));
    if (s == all) break;
  }
  return best;
}

// b(H,s): most singleton components over Berge-Tutte partitions of H of
// value at most s - 1.
inline std::optional<int> b_param(const Graph& h, int s) {
  if (h.order() > kMaxStructureOrder) throw SizeCap("b(H,s) supports at most 16 vertices");
  if (s < 1) throw InvalidParams("s must be positive");
  std::optional<int> best;
  detail::for_each_berge_tutte_partition(h, [&](const BergeTuttePartition& p) {
    if (p.value <= s - 1) best = std::max(best.value_or(0), p.singleton_count());
  });
  return best;
}

inline StructureParams structure_params(const Graph& h, int s) {
  if (h.order() > kMaxStructureOrder) throw SizeCap("structure_params supports at most 16 vertices");
  StructureParams p;
  p.tau = vertex_cover_number(h);
  p.alpha = independence_number(h);
  p.nu = matching_number(h);
  if (p.nu < s) p.b = b_param(h, s);
  return p;
}

inline constexpr int kMaxBlowupBaseOrder = 10;

// Largest |U| such that the (m_max, U)-blowup of H has no M_s, or nullopt if
// H itself contains M_s.
inline std::optional<int> b_param_blowup(const Graph& h, int s, int m_max) {
  if (h.order() > kMaxBlowupBaseOrder) throw SizeCap("blowup characterisation supports at most 10 vertices");
  if (s < 1) throw InvalidParams("s must be positive");
  if (m_max < s) throw InvalidParams("blowup multiplicity must be at least s");
  // An M_s touches at most s copies of a blown-up vertex, so multiplicity
  // min(m_max, s) decides the same question.
  const int m = std::min(m_max, s);
  std::optional<int> best;
  const VertexSet all = h.vertices();
  for (VertexSet u = 0;; ++u) {
    if (!best || popcount(u) > *best)
      if (matching_number(partial_blowup(h, u, m)) < s) best = popcount(u);
    if (u == all) break;
  }
  return best;
}

inline std::optional<int> b_param_blowup(const Graph& h, int s) { return b_param_blowup(h, s, 2 * s); }

}  // namespace turanlab
