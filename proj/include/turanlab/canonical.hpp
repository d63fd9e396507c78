#pragma once

#include <algorithm>
#include <vector>

#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"

namespace turanlab {

inline constexpr int kMaxCanonicalOrder = 16;

// Upper triangle of the relabelled adjacency matrix, x(0,1) first in the
// most significant used bit. Equal certificates <=> isomorphic graphs.
using Certificate = unsigned __int128;

struct CanonicalLabeling {
  std::vector<int> position;  // vertex v goes to position[v]
  Certificate certificate = 0;
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    std::vector<VertexSet> cells;
    if (n_ > 0) cells.push_back(g_.vertices());
    refine(cells);
    search(cells);
    return best_;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. New cells
  // replace the old one in place, ordered by signature, so the result does
  // not depend on vertex names.
  void refine(std::vector<VertexSet>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (popcount(cells[c]) == 1) continue;
        std::vector<std::pair<std::uint64_t, int>> sig;
        for_each_vertex(cells[c], [&](int v) {
          std::uint64_t s = 0;
          for (VertexSet cell : cells) s = (s << 4) | static_cast<std::uint64_t>(popcount(g_.neighbors(v) & cell));
          sig.emplace_back(s, v);
        });
        std::sort(sig.begin(), sig.end());
        if (sig.front().first == sig.back().first) continue;
        std::vector<VertexSet> split;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) split.push_back(0);
          split.back() |= bit(sig[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
        changed = true;
        break;
      }
    }
  }

  void leaf(const std::vector<VertexSet>& cells) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (VertexSet c : cells) order.push_back(lowest(c));
    Certificate cert = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i)
        cert = (cert << 1) | (g_.has_edge(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? 1U : 0U);
    if (!have_ || cert > best_.certificate) {
      have_ = true;
      best_.certificate = cert;
      best_.position.assign(static_cast<std::size_t>(n_), 0);
      for (int p = 0; p < n_; ++p) best_.position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    }
  }

  void search(const std::vector<VertexSet>& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto idx = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = *target;
    // Swapping two twins fixes every individualised vertex, so their
    // subtrees are isomorphic and only one needs exploring.
    std::vector<int> tried;
    for_each_vertex(cell, [&](int v) {
      for (int u : tried)
        if ((g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u))) return;
      tried.push_back(v);
      std::vector<VertexSet> next = cells;
      next[idx] = bit(v);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(idx) + 1, cell & ~bit(v));
      refine(next);
      search(next);
    });
  }

  const Graph& g_;
  int n_;
  bool have_ = false;
  CanonicalLabeling best_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw SizeCap("canonical labelling supports at most 16 vertices");
  if (g.order() == 0) return {};
  return detail::CanonicalSearch(g).run();
}

inline Graph canonical_form(const Graph& g) {
  return g.relabeled(canonical_labeling(g).position);
}

inline std::string canonical_graph6(const Graph& g) { return serialize_graph6(canonical_form(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_labeling(a).certificate == canonical_labeling(b).certificate;
}

}  // namespace turanlab
