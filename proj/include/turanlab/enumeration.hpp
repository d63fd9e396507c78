#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/checked.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"

namespace turanlab {

inline constexpr int kDefaultEnumerationOrder = 9;
inline constexpr int kMaxEnumerationOrder = 10;

struct EnumerationOptions {
  std::optional<Graph> prune;  // never yield or extend a graph containing this
  int workers = 1;
  bool allow_n10 = false;
};

inline void check_enumeration_order(int n, bool allow_n10) {
  if (n < 0) throw InvalidParams("graph order must be non-negative");
  if (n > kMaxEnumerationOrder) throw SizeCap("enumeration is capped at n = 10");
  if (n > kDefaultEnumerationOrder && !allow_n10)
    throw SizeCap("enumeration at n = 10 requires the explicit n10 override");
}

namespace detail {

// Canonical graphs on <= 11 vertices travel as their certificate, which is
// also the packed upper triangle of the canonical relabelling.
using Packed = std::uint64_t;

inline Graph unpack(Packed code, int n) {
  Graph g(n);
  int k = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --k) & 1U) g.add_edge(i, j);
  return g;
}

inline Packed pack(const Graph& g) {
  Packed code = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
  return code;
}

// Vertex-by-vertex canonical augmentation. A child G + v is accepted when v
// could be the canonical deletion vertex w: among vertices maximising
// (degree, neighbour degree sum) the one placed last by the canonical
// labelling. Acceptance is tested as G + v - w ~ G, which pins down the
// parent class uniquely; isomorphic children of one parent are merged by
// certificate.
class Augmenter {
 public:
  explicit Augmenter(const std::optional<Graph>& prune) {
    if (prune) prune_.emplace(*prune);
  }

  template <class Emit>
  void children(Packed parent_code, int m, Emit&& emit) const {
    const Graph parent = unpack(parent_code, m);
    const int n = m + 1;
    std::unordered_set<Packed> seen;
    const VertexSet limit = prefix_set(m);
    for (VertexSet s = 0;; ++s) {
      Graph child = parent_with(parent, m, s);
      if (auto code = accept(child, parent_code, n); code && seen.insert(*code).second) {
        if (!prune_ || !prune_->embeds(child)) emit(*code);
      }
      if (s == limit) break;
    }
  }

 private:
  static Graph parent_with(const Graph& parent, int m, VertexSet s) {
    Graph child = disjoint_union(parent, Graph(1));
    for_each_vertex(s, [&](int u) { child.add_edge(u, m); });
    return child;
  }

  static std::optional<Packed> accept(const Graph& child, Packed parent_code, int n) {
    const int v = n - 1;
    std::vector<std::pair<int, int>> score(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      int sum = 0;
      for_each_vertex(child.neighbors(x), [&](int y) { sum += child.degree(y); });
      score[static_cast<std::size_t>(x)] = {child.degree(x), sum};
    }
    const auto top = *std::max_element(score.begin(), score.end());
    if (score[static_cast<std::size_t>(v)] != top) return std::nullopt;

    const CanonicalLabeling lab = canonical_labeling(child);
    int w = -1;
    for (int x = 0; x < n; ++x)
      if (score[static_cast<std::size_t>(x)] == top &&
          (w < 0 || lab.position[static_cast<std::size_t>(x)] > lab.position[static_cast<std::size_t>(w)]))
        w = x;
    if (w != v) {
      const Graph reduced = child.induced(child.vertices() & ~bit(w));
      if (canonical_labeling(reduced).certificate != parent_code) return std::nullopt;
    }
    return static_cast<Packed>(lab.certificate);
  }

  std::optional<Embedder> prune_;
};

// Runs job(i, worker) for i in [0, count) on `workers` threads. Items are
// striped by index so the item -> worker assignment is fixed.
template <class Job>
void run_striped(std::size_t count, int workers, Job&& job) {
  workers = std::max(1, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) job(i, 0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) job(i, w);
    });
  for (auto& t : pool) t.join();
}

inline std::vector<Packed> next_level(const std::vector<Packed>& parents, int m, const Augmenter& aug, int workers) {
  std::vector<std::vector<Packed>> per_parent(parents.size());
  run_striped(parents.size(), workers, [&](std::size_t i, int) {
    aug.children(parents[i], m, [&](Packed c) { per_parent[i].push_back(c); });
  });
  std::vector<Packed> out;
  for (auto& v : per_parent) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace detail

// Folds `visit(acc, graph)` over one canonical representative of every
// isomorphism class on n vertices (F-free ones only when pruning). Each
// worker owns an accumulator seeded from `init`; they are combined with
// `merge(acc, other)` in worker order. Results are independent of the worker
// count whenever `merge` is order-insensitive.
template <class Acc, class Visit, class Merge>
Acc fold_graphs(int n, const EnumerationOptions& opt, Acc init, Visit&& visit, Merge&& merge) {
  check_enumeration_order(n, opt.allow_n10);
  if (n == 0) {
    if (!opt.prune || opt.prune->order() > 0) visit(init, Graph(0));
    return init;
  }
  const detail::Augmenter aug(opt.prune);
  std::vector<detail::Packed> level{0};
  if (opt.prune && opt.prune->order() == 0) level.clear();
  for (int m = 0; m + 1 < n; ++m) level = detail::next_level(level, m, aug, opt.workers);

  const int workers = std::max(1, opt.workers);
  std::vector<Acc> accs(static_cast<std::size_t>(workers), init);
  detail::run_striped(level.size(), workers, [&](std::size_t i, int w) {
    aug.children(level[i], n - 1, [&](detail::Packed c) { visit(accs[static_cast<std::size_t>(w)], detail::unpack(c, n)); });
  });
  Acc out = std::move(accs[0]);
  for (std::size_t w = 1; w < accs.size(); ++w) merge(out, std::move(accs[w]));
  return out;
}

// Every isomorphism class on n vertices (F-free ones when pruning), as
// canonical forms in generation order.
inline std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& opt = {}) {
  check_enumeration_order(n, opt.allow_n10);
  if (n == 0) {
    if (opt.prune && opt.prune->order() == 0) return {};
    return {Graph(0)};
  }
  const detail::Augmenter aug(opt.prune);
  std::vector<detail::Packed> level{0};
  if (opt.prune && opt.prune->order() == 0) return {};
  for (int m = 0; m < n; ++m) level = detail::next_level(level, m, aug, opt.workers);
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto code : level) out.push_back(detail::unpack(code, n));
  return out;
}

// Streams the same sequence as enumerate_graphs without materialising the
// top level; fn runs on the calling thread only.
template <class Fn>
void for_each_graph(int n, const EnumerationOptions& opt, Fn&& fn) {
  check_enumeration_order(n, opt.allow_n10);
  if (n == 0) {
    if (!opt.prune || opt.prune->order() > 0) fn(Graph(0));
    return;
  }
  if (opt.prune && opt.prune->order() == 0) return;
  const detail::Augmenter aug(opt.prune);
  std::vector<detail::Packed> level{0};
  for (int m = 0; m + 1 < n; ++m) level = detail::next_level(level, m, aug, opt.workers);
  for (auto code : level) aug.children(code, n - 1, [&](detail::Packed c) { fn(detail::unpack(c, n)); });
}

inline std::vector<Graph> enumerate_graphs(int n, const Graph& prune) {
  EnumerationOptions opt;
  opt.prune = prune;
  return enumerate_graphs(n, opt);
}

// Exact ex(n, H, F) together with every maximiser.
struct ExtremalResult {
  int n = 0;
  std::string h_spec;
  std::string f_spec;
  Count value = 0;
  std::vector<std::string> extremal;  // canonical graph6, sorted
  std::uint64_t searched = 0;         // isomorphism classes examined
};

namespace detail {

struct ScanAcc {
  std::vector<Count> best;
  std::vector<std::vector<std::string>> argmax;
  std::uint64_t searched = 0;
};

inline void merge_scan(ScanAcc& a, ScanAcc&& b) {
  a.searched += b.searched;
  for (std::size_t i = 0; i < a.best.size(); ++i) {
    if (b.argmax[i].empty()) continue;
    if (a.argmax[i].empty() || b.best[i] > a.best[i]) {
      a.best[i] = b.best[i];
      a.argmax[i] = std::move(b.argmax[i]);
    } else if (b.best[i] == a.best[i]) {
      a.argmax[i].insert(a.argmax[i].end(), b.argmax[i].begin(), b.argmax[i].end());
    }
  }
}

// Scores each F-free class with `k` values at once and tracks every maximiser.
template <class Score>
std::vector<ExtremalResult> extremal_scan(int n, const Graph& f, std::size_t k, const EnumerationOptions& base,
                                          Score&& score) {
  EnumerationOptions opt = base;
  opt.prune = f;
  ScanAcc init{std::vector<Count>(k, 0), std::vector<std::vector<std::string>>(k), 0};
  ScanAcc acc = fold_graphs(
      n, opt, init,
      [&](ScanAcc& a, const Graph& g) {
        ++a.searched;
        std::vector<Count> values = score(g);
        for (std::size_t i = 0; i < k; ++i) {
          if (a.argmax[i].empty() || values[i] > a.best[i]) {
            a.best[i] = values[i];
            a.argmax[i].assign(1, serialize_graph6(g));
          } else if (values[i] == a.best[i]) {
            a.argmax[i].push_back(serialize_graph6(g));
          }
        }
      },
      merge_scan);
  std::vector<ExtremalResult> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    out[i].n = n;
    out[i].f_spec = serialize_graph6(f);
    out[i].value = acc.best[i];
    out[i].extremal = std::move(acc.argmax[i]);
    std::sort(out[i].extremal.begin(), out[i].extremal.end());
    out[i].searched = acc.searched;
  }
  return out;
}

}  // namespace detail

inline ExtremalResult ex_brute(int n, const Graph& h, const Graph& f, const EnumerationOptions& opt = {}) {
  check_enumeration_order(n, opt.allow_n10);
  const CopyCounter counter(h);
  auto results = detail::extremal_scan(n, f, 1, opt, [&](const Graph& g) { return std::vector<Count>{counter(g)}; });
  results[0].h_spec = serialize_graph6(h);
  return results[0];
}

// ex(n, M_t, F) for t = 1..t_max from a single enumeration pass; entry
// t - 1 holds M_t.
inline std::vector<ExtremalResult> ex_brute_matchings(int n, const Graph& f, int t_max,
                                                      const EnumerationOptions& opt = {}) {
  check_enumeration_order(n, opt.allow_n10);
  if (t_max < 1) throw InvalidParams("t_max must be positive");
  auto results = detail::extremal_scan(n, f, static_cast<std::size_t>(t_max), opt, [&](const Graph& g) {
    MatchingProfile p = matching_profile(g);
    std::vector<Count> v(static_cast<std::size_t>(t_max));
    for (int t = 1; t <= t_max; ++t) v[static_cast<std::size_t>(t - 1)] = p[t];
    return v;
  });
  for (int t = 1; t <= t_max; ++t)
    results[static_cast<std::size_t>(t - 1)].h_spec = serialize_graph6(build(matching_spec(t)));
  return results;
}

struct FamilyMax {
  Count value = 0;
  std::size_t argmax = 0;  // first member attaining the max
  SpecPtr spec;
};

// max over the family of N(h, member padded to n vertices).
inline FamilyMax ex_over_family(int n, const Graph& h, const std::vector<SpecPtr>& family) {
  if (family.empty()) throw InvalidSpec("empty construction family");
  const CopyCounter counter(h);
  FamilyMax best;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Graph g = build(family[i]);
    if (g.order() > n)
      throw InvalidSpec(describe(family[i]) + " has more than " + std::to_string(n) + " vertices");
    Count c = counter(pad_to(g, n));
    if (i == 0 || c > best.value) best = {c, i, family[i]};
  }
  return best;
}

}  // namespace turanlab
