#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "turanlab/checked.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// counts[t] = N(M_t, G) for t = 0..nu(G); counts[0] = 1, counts.back() >= 1.
struct MatchingProfile {
  std::vector<Count> counts{1};

  int matching_number() const { return static_cast<int>(counts.size()) - 1; }
  Count operator[](int t) const {
    return t >= 0 && t < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(t)] : 0;
  }
  friend bool operator==(const MatchingProfile&, const MatchingProfile&) = default;
};

namespace detail {

inline void add_into(std::vector<Count>& acc, const std::vector<Count>& x, int shift) {
  if (acc.size() < x.size() + static_cast<std::size_t>(shift)) acc.resize(x.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    acc[i + static_cast<std::size_t>(shift)] = checked_add(acc[i + static_cast<std::size_t>(shift)], x[i]);
}

inline std::vector<Count> convolve(const std::vector<Count>& a, const std::vector<Count>& b) {
  std::vector<Count> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  return out;
}

// Matching generating polynomial of the subgraph induced by a vertex mask.
// Expanding every edge at a pivot v through the edge recurrence
//   N(M_t, G) = N(M_t, G - uv) + N(M_{t-1}, G - u - v)
// gives m(S) = m(S - v) + x * sum_{u in N(v) & S} m(S - v - u).
class MatchingPolynomial {
 public:
  explicit MatchingPolynomial(const Graph& g) : g_(g) {}

  const std::vector<Count>& of(VertexSet s) {
    s = strip_isolated(s);
    if (s == 0) return unit_;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;

    // Min-degree pivot keeps twin-heavy graphs (large independent sides)
    // polynomial in the number of distinct states.
    int pivot = -1;
    int best = kMaxVertices + 1;
    for_each_vertex(s, [&](int v) {
      int d = popcount(g_.neighbors(v) & s);
      if (d < best) {
        best = d;
        pivot = v;
      }
    });
    const VertexSet rest = s & ~bit(pivot);
    std::vector<Count> result = of(rest);
    for_each_vertex(g_.neighbors(pivot) & rest, [&](int u) {
      add_into(result, of(rest & ~bit(u)), 1);
    });
    return memo_.emplace(s, std::move(result)).first->second;
  }

 private:
  VertexSet strip_isolated(VertexSet s) const {
    VertexSet keep = 0;
    for_each_vertex(s, [&](int v) {
      if (g_.neighbors(v) & s) keep |= bit(v);
    });
    return keep;
  }

  const Graph& g_;
  std::unordered_map<VertexSet, std::vector<Count>> memo_;
  std::vector<Count> unit_{1};
};

}  // namespace detail

// Exact N(M_t, G) for every t. Components are handled separately and
// combined by polynomial multiplication.
inline MatchingProfile matching_profile(const Graph& g) {
  std::vector<Count> total{1};
  for (VertexSet comp : g.components()) {
    if (popcount(comp) < 2) continue;
    detail::MatchingPolynomial poly(g);
    total = detail::convolve(total, poly.of(comp));
  }
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return MatchingProfile{std::move(total)};
}

// Injective homomorphism search of a pattern into a host. Pattern vertices
// are visited in a connectivity-first order; each step's candidates are the
// intersection of the images' neighbourhoods of already placed neighbours.
class Embedder {
 public:
  explicit Embedder(const Graph& pattern) : pattern_(pattern) {
    const int k = pattern.order();
    VertexSet placed = 0;
    for (int i = 0; i < k; ++i) {
      int pick = -1;
      std::pair<int, int> key{-1, -1};
      for_each_vertex(pattern.vertices() & ~placed, [&](int v) {
        std::pair<int, int> cand{popcount(pattern.neighbors(v) & placed), pattern.degree(v)};
        if (cand > key) {
          key = cand;
          pick = v;
        }
      });
      Step step;
      step.vertex = pick;
      step.degree = pattern.degree(pick);
      for (int j = 0; j < i; ++j)
        if (pattern.has_edge(pick, order_[static_cast<std::size_t>(j)].vertex)) step.back.push_back(j);
      order_.push_back(step);
      placed |= bit(pick);
    }
  }

  const Graph& pattern() const { return pattern_; }

  // Number of injective maps V(pattern) -> V(host) sending edges to edges.
  Count count_embeddings(const Graph& host) const {
    if (pattern_.order() == 0) return 1;
    if (pattern_.order() > host.order()) return 0;
    State st = prepare(host);
    return count_from(st, 0);
  }

  bool embeds(const Graph& host) const {
    if (pattern_.order() == 0) return true;
    if (pattern_.order() > host.order()) return false;
    State st = prepare(host);
    return find_from(st, 0);
  }

 private:
  struct Step {
    int vertex = 0;
    int degree = 0;
    std::vector<int> back;  // earlier positions adjacent to this one
  };

  struct State {
    const Graph* host;
    std::vector<VertexSet> min_degree;  // host vertices of degree >= d, per step
    std::vector<int> image;
    VertexSet used = 0;
  };

  State prepare(const Graph& host) const {
    State st{&host, {}, std::vector<int>(order_.size(), -1), 0};
    st.min_degree.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      VertexSet ok = 0;
      for (int v = 0; v < host.order(); ++v)
        if (host.degree(v) >= order_[i].degree) ok |= bit(v);
      st.min_degree[i] = ok;
    }
    return st;
  }

  VertexSet candidates(const State& st, std::size_t i) const {
    VertexSet c = st.min_degree[i] & ~st.used;
    for (int j : order_[i].back) c &= st.host->neighbors(st.image[static_cast<std::size_t>(j)]);
    return c;
  }

  Count count_from(State& st, std::size_t i) const {
    VertexSet c = candidates(st, i);
    if (i + 1 == order_.size()) return static_cast<Count>(popcount(c));
    Count total = 0;
    for_each_vertex(c, [&](int x) {
      st.image[i] = x;
      st.used |= bit(x);
      total = checked_add(total, count_from(st, i + 1));
      st.used &= ~bit(x);
    });
    return total;
  }

  bool find_from(State& st, std::size_t i) const {
    VertexSet c = candidates(st, i);
    if (i + 1 == order_.size()) return c != 0;
    while (c) {
      int x = lowest(c);
      c &= c - 1;
      st.image[i] = x;
      st.used |= bit(x);
      bool found = find_from(st, i + 1);
      st.used &= ~bit(x);
      if (found) return true;
    }
    return false;
  }

  Graph pattern_;
  std::vector<Step> order_;
};

namespace detail {

// Classes of u ~ v iff N(u) - v == N(v) - u. This relation is an
// equivalence; each class is a clique or an independent set, and any
// permutation inside a class is an automorphism.
inline std::vector<VertexSet> twin_classes(const Graph& g) {
  std::vector<VertexSet> classes;
  VertexSet seen = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (seen & bit(u)) continue;
    VertexSet cls = bit(u);
    for (int v = u + 1; v < g.order(); ++v) {
      if (seen & bit(v)) continue;
      if ((g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) cls |= bit(v);
    }
    seen |= cls;
    classes.push_back(cls);
  }
  return classes;
}

// Counts colour- and adjacency-preserving bijections of a small coloured graph.
inline Count count_coloured_automorphisms(const Graph& q, const std::vector<long>& colour) {
  const int k = q.order();
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  auto rec = [&](auto&& self, int i, VertexSet used) -> Count {
    if (i == k) return 1;
    Count total = 0;
    for (int x = 0; x < k; ++x) {
      if (used & bit(x)) continue;
      if (colour[static_cast<std::size_t>(x)] != colour[static_cast<std::size_t>(i)]) continue;
      if (q.degree(x) != q.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = q.has_edge(i, j) == q.has_edge(x, image[static_cast<std::size_t>(j)]);
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = x;
      total = checked_add(total, self(self, i + 1, used | bit(x)));
    }
    return total;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

inline constexpr int kMaxAutomorphismOrder = 12;

// |Aut(h)| by backtracking over the twin quotient: the product of factorials
// of twin-class sizes times the automorphisms of the quotient graph coloured
// by (class size, clique or independent).
inline Count automorphism_count(const Graph& h) {
  if (h.order() > kMaxAutomorphismOrder)
    throw SizeCap("automorphism_count supports at most 12 vertices");
  auto classes = detail::twin_classes(h);
  const int k = static_cast<int>(classes.size());
  Graph quotient(k);
  std::vector<long> colour(static_cast<std::size_t>(k));
  Count within = 1;
  for (int i = 0; i < k; ++i) {
    VertexSet ci = classes[static_cast<std::size_t>(i)];
    int size = popcount(ci);
    int rep = lowest(ci);
    bool clique = size > 1 && (h.neighbors(rep) & ci) != 0;
    colour[static_cast<std::size_t>(i)] = size * 2 + (clique ? 1 : 0);
    within = checked_mul(within, factorial(size));
    for (int j = 0; j < i; ++j)
      if (h.has_edge(rep, lowest(classes[static_cast<std::size_t>(j)]))) quotient.add_edge(i, j);
  }
  return checked_mul(within, detail::count_coloured_automorphisms(quotient, colour));
}

// Counts unlabelled (not necessarily induced) copies of a fixed pattern.
// Matchings take the recurrence path; everything else divides embeddings
// by |Aut(pattern)|.
class CopyCounter {
 public:
  explicit CopyCounter(const Graph& pattern)
      : embedder_(pattern), automorphisms_(automorphism_count(pattern)) {
    bool perfect = pattern.order() > 0;
    for (int v = 0; v < pattern.order(); ++v) perfect = perfect && pattern.degree(v) == 1;
    if (perfect) matching_size_ = pattern.order() / 2;
  }

  Count operator()(const Graph& host) const {
    if (matching_size_) return matching_profile(host)[*matching_size_];
    return by_embeddings(host);
  }

  Count by_embeddings(const Graph& host) const {
    Count emb = embedder_.count_embeddings(host);
    if (emb % automorphisms_ != 0)
      throw InternalInconsistency("embedding count not divisible by |Aut(H)|");
    return emb / automorphisms_;
  }

  const Graph& pattern() const { return embedder_.pattern(); }
  std::optional<int> matching_size() const { return matching_size_; }

 private:
  Embedder embedder_;
  Count automorphisms_;
  std::optional<int> matching_size_;
};

// N(h, g) through the general embedding engine only.
inline Count count_copies(const Graph& h, const Graph& g) {
  return CopyCounter(h).by_embeddings(g);
}

inline bool contains(const Graph& h, const Graph& g) { return Embedder(h).embeds(g); }

}  // namespace turanlab
