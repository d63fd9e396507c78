#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/error.hpp"

namespace turanlab {

inline constexpr int kMaxVertices = 64;

// Vertex subsets are bitmasks; bit v stands for vertex v.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet prefix_set(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

// Calls fn(v) for every v in s, in increasing order.
template <class Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    fn(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

// Simple undirected graph on vertices 0..n-1, n <= 64. One adjacency word per
// vertex, so edge queries and neighbourhood intersections are single word ops.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw SizeCap("graph order " + std::to_string(n) + " outside [0, 64]");
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  VertexSet vertices() const { return prefix_set(n_); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
  }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  int min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for_each_vertex(adj_[u] & ~prefix_set(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  // Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const {
    keep &= vertices();
    std::array<int, kMaxVertices> index{};
    int m = 0;
    for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = m++; });
    Graph h(m);
    for_each_vertex(keep, [&](int u) {
      for_each_vertex(adj_[u] & keep, [&](int v) {
        h.adj_[static_cast<std::size_t>(index[u])] |= bit(index[static_cast<std::size_t>(v)]);
      });
    });
    return h;
  }

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw InvalidSpec("permutation size mismatch");
    Graph h(n_);
    VertexSet seen = 0;
    for (int v = 0; v < n_; ++v) {
      int p = perm[static_cast<std::size_t>(v)];
      if (p < 0 || p >= n_ || (seen & bit(p))) throw InvalidSpec("not a permutation");
      seen |= bit(p);
    }
    for (auto [u, v] : edges())
      h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
  }

  Graph complement() const {
    Graph h(n_);
    for (int v = 0; v < n_; ++v) h.adj_[v] = ~adj_[v] & vertices() & ~bit(v);
    return h;
  }

  // Connected components of the subgraph induced by `within`, as vertex
  // sets ordered by their lowest vertex.
  std::vector<VertexSet> components(VertexSet within) const {
    std::vector<VertexSet> out;
    VertexSet rest = within & vertices();
    while (rest) {
      VertexSet comp = rest & (~rest + 1);
      VertexSet frontier = comp;
      while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= adj_[v]; });
        next &= rest & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      rest &= ~comp;
    }
    return out;
  }

  std::vector<VertexSet> components() const { return components(vertices()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InvalidSpec("vertex out of range");
    if (u == v) throw InvalidSpec("self-loops are not allowed");
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Block-diagonal union; g2's vertices follow g1's.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.order();
  if (n1 + g2.order() > kMaxVertices) throw SizeCap("disjoint union exceeds 64 vertices");
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

// Disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  int n1 = g1.order();
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < g2.order(); ++v) g.add_edge(u, n1 + v);
  return g;
}

// Pads g with isolated vertices up to order n.
inline Graph pad_to(const Graph& g, int n) {
  if (g.order() > n) throw InvalidSpec("graph has more than " + std::to_string(n) + " vertices");
  return disjoint_union(g, Graph(n - g.order()));
}

}  // namespace turanlab
