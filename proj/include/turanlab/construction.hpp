#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"

namespace turanlab {

struct ConstructionSpec;
using SpecPtr = std::shared_ptr<const ConstructionSpec>;

namespace spec {

struct Empty { int n; };                 // n isolated vertices
struct Complete { int n; };              // K_n
struct Path { int k; };                  // P_k, k vertices
struct Star { int r; };                  // S_r, centre 0 and r leaves
struct Matching { int k; };              // M_k, edges (2i, 2i+1)
struct Cycle { int n; };                 // C_n, n >= 3
struct TuranGraph { int n, k; };         // T(n,k), larger parts first
struct SplitH { int n, k, a; };          // H(n,k,a), laid out A, C, B
struct FaudreeSchelpG { int n, k, l; };  // l K_{k-1} then K_{(k-2)/2} + empty
struct Friendship { int n; };            // F_n, centre 0
struct CliqueUnion { int a, k, b; };     // a K_{k-1} then K_b
struct DisjointUnion { std::vector<SpecPtr> parts; };
struct Join { SpecPtr left, right; };
struct Complement { SpecPtr base; };
struct PartialBlowup { SpecPtr base; std::vector<int> blown; int m; };
struct Literal { Graph graph; };

}  // namespace spec

// Tagged description of a named construction. Building is deterministic:
// blocks are laid out left to right in the order they are listed.
struct ConstructionSpec {
  using Node = std::variant<spec::Empty, spec::Complete, spec::Path, spec::Star, spec::Matching,
                            spec::Cycle, spec::TuranGraph, spec::SplitH, spec::FaudreeSchelpG,
                            spec::Friendship, spec::CliqueUnion, spec::DisjointUnion, spec::Join,
                            spec::Complement, spec::PartialBlowup, spec::Literal>;
  Node node;
};

template <class T>
SpecPtr make_spec(T node) {
  return std::make_shared<const ConstructionSpec>(ConstructionSpec{std::move(node)});
}

// Convenience constructors.
inline SpecPtr empty_spec(int n) { return make_spec(spec::Empty{n}); }
inline SpecPtr complete_spec(int n) { return make_spec(spec::Complete{n}); }
inline SpecPtr path_spec(int k) { return make_spec(spec::Path{k}); }
inline SpecPtr star_spec(int r) { return make_spec(spec::Star{r}); }
inline SpecPtr matching_spec(int k) { return make_spec(spec::Matching{k}); }
inline SpecPtr cycle_spec(int n) { return make_spec(spec::Cycle{n}); }
inline SpecPtr turan_spec(int n, int k) { return make_spec(spec::TuranGraph{n, k}); }
inline SpecPtr split_h_spec(int n, int k, int a) { return make_spec(spec::SplitH{n, k, a}); }
inline SpecPtr faudree_schelp_spec(int n, int k, int l) {
  return make_spec(spec::FaudreeSchelpG{n, k, l});
}
inline SpecPtr friendship_spec(int n) { return make_spec(spec::Friendship{n}); }
inline SpecPtr clique_union_spec(int a, int k, int b) { return make_spec(spec::CliqueUnion{a, k, b}); }
inline SpecPtr union_spec(std::vector<SpecPtr> parts) {
  return make_spec(spec::DisjointUnion{std::move(parts)});
}
inline SpecPtr join_spec(SpecPtr l, SpecPtr r) { return make_spec(spec::Join{std::move(l), std::move(r)}); }
inline SpecPtr complement_spec(SpecPtr base) { return make_spec(spec::Complement{std::move(base)}); }
inline SpecPtr blowup_spec(SpecPtr base, std::vector<int> blown, int m) {
  return make_spec(spec::PartialBlowup{std::move(base), std::move(blown), m});
}
inline SpecPtr literal_spec(Graph g) { return make_spec(spec::Literal{std::move(g)}); }

// Replaces every u in `blown` by m pairwise non-adjacent copies; each edge
// becomes a complete bipartite graph between the copy sets. Vertices keep
// their relative order, copies of u are consecutive.
inline Graph partial_blowup(const Graph& h, VertexSet blown, int m) {
  if (m < 1) throw InvalidSpec("blowup multiplicity must be positive");
  blown &= h.vertices();
  const int n = h.order() + popcount(blown) * (m - 1);
  if (n > kMaxVertices) throw SizeCap("partial blowup exceeds 64 vertices");
  std::vector<int> first(static_cast<std::size_t>(h.order()) + 1);
  for (int v = 0; v < h.order(); ++v)
    first[static_cast<std::size_t>(v) + 1] =
        first[static_cast<std::size_t>(v)] + ((blown & bit(v)) ? m : 1);
  Graph g(n);
  for (auto [u, v] : h.edges())
    for (int i = first[static_cast<std::size_t>(u)]; i < first[static_cast<std::size_t>(u) + 1]; ++i)
      for (int j = first[static_cast<std::size_t>(v)]; j < first[static_cast<std::size_t>(v) + 1]; ++j)
        g.add_edge(i, j);
  return g;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph build_node(const ConstructionSpec& s);

inline Graph build_ptr(const SpecPtr& p) {
  require(p != nullptr, "null construction");
  return build_node(*p);
}

inline Graph build_node(const ConstructionSpec& s) {
  return std::visit(
      [](const auto& c) -> Graph {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, spec::Empty>) {
          require(c.n >= 0, "Empty requires n >= 0");
          return Graph(c.n);
        } else if constexpr (std::is_same_v<T, spec::Complete>) {
          require(c.n >= 0, "Complete requires n >= 0");
          return complete_graph(c.n);
        } else if constexpr (std::is_same_v<T, spec::Path>) {
          require(c.k >= 1, "Path requires k >= 1");
          Graph g(c.k);
          for (int v = 0; v + 1 < c.k; ++v) g.add_edge(v, v + 1);
          return g;
        } else if constexpr (std::is_same_v<T, spec::Star>) {
          require(c.r >= 0, "Star requires r >= 0");
          Graph g(c.r + 1);
          for (int v = 1; v <= c.r; ++v) g.add_edge(0, v);
          return g;
        } else if constexpr (std::is_same_v<T, spec::Matching>) {
          require(c.k >= 0, "Matching requires k >= 0");
          Graph g(2 * c.k);
          for (int i = 0; i < c.k; ++i) g.add_edge(2 * i, 2 * i + 1);
          return g;
        } else if constexpr (std::is_same_v<T, spec::Cycle>) {
          require(c.n >= 3, "Cycle requires n >= 3");
          Graph g(c.n);
          for (int v = 0; v < c.n; ++v) g.add_edge(v, (v + 1) % c.n);
          return g;
        } else if constexpr (std::is_same_v<T, spec::TuranGraph>) {
          require(c.k >= 1 && c.n >= 0, "TuranGraph requires k >= 1 and n >= 0");
          Graph g(c.n);
          std::vector<int> part(static_cast<std::size_t>(c.n));
          int v = 0;
          for (int p = 0; p < c.k; ++p) {
            int size = c.n / c.k + (p < c.n % c.k ? 1 : 0);
            for (int i = 0; i < size; ++i) part[static_cast<std::size_t>(v++)] = p;
          }
          for (int a = 0; a < c.n; ++a)
            for (int b = a + 1; b < c.n; ++b)
              if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)]) g.add_edge(a, b);
          return g;
        } else if constexpr (std::is_same_v<T, spec::SplitH>) {
          require(c.a >= 0 && c.k >= 2 * c.a && c.n >= c.k, "SplitH requires 0 <= 2a <= k <= n");
          // A = [0, a), C = [a, k - a), B = [k - a, n).
          Graph g(c.n);
          const int clique = c.k - c.a;
          for (int u = 0; u < clique; ++u)
            for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
          for (int u = 0; u < c.a; ++u)
            for (int v = clique; v < c.n; ++v) g.add_edge(u, v);
          return g;
        } else if constexpr (std::is_same_v<T, spec::FaudreeSchelpG>) {
          require(c.k >= 2 && c.k % 2 == 0, "FaudreeSchelpG requires even k >= 2");
          const int half = (c.k - 2) / 2;
          require(c.l >= 0 && c.n >= c.l * (c.k - 1) + half,
                  "FaudreeSchelpG requires n >= l(k-1) + (k-2)/2");
          Graph g = Graph(0);
          for (int i = 0; i < c.l; ++i) g = disjoint_union(g, complete_graph(c.k - 1));
          const int rest = c.n - c.l * (c.k - 1) - half;
          return disjoint_union(g, join(complete_graph(half), Graph(rest)));
        } else if constexpr (std::is_same_v<T, spec::Friendship>) {
          require(c.n >= 1, "Friendship requires n >= 1");
          Graph g(c.n);
          for (int v = 1; v < c.n; ++v) g.add_edge(0, v);
          for (int v = 1; v + 1 < c.n; v += 2) g.add_edge(v, v + 1);
          return g;
        } else if constexpr (std::is_same_v<T, spec::CliqueUnion>) {
          require(c.a >= 0 && c.k >= 2 && c.b >= 0 && c.b < c.k,
                  "CliqueUnion requires a >= 0, k >= 2 and 0 <= b < k");
          if (c.a * (c.k - 1) + c.b > kMaxVertices) throw SizeCap("CliqueUnion exceeds 64 vertices");
          Graph g(0);
          for (int i = 0; i < c.a; ++i) g = disjoint_union(g, complete_graph(c.k - 1));
          return disjoint_union(g, complete_graph(c.b));
        } else if constexpr (std::is_same_v<T, spec::DisjointUnion>) {
          Graph g(0);
          for (const auto& part : c.parts) g = disjoint_union(g, build_ptr(part));
          return g;
        } else if constexpr (std::is_same_v<T, spec::Join>) {
          return join(build_ptr(c.left), build_ptr(c.right));
        } else if constexpr (std::is_same_v<T, spec::Complement>) {
          return build_ptr(c.base).complement();
        } else if constexpr (std::is_same_v<T, spec::PartialBlowup>) {
          Graph h = build_ptr(c.base);
          VertexSet blown = 0;
          for (int u : c.blown) {
            require(u >= 0 && u < h.order(), "PartialBlowup vertex out of range");
            blown |= bit(u);
          }
          require(c.m >= 1, "PartialBlowup requires m >= 1");
          return partial_blowup(h, blown, c.m);
        } else {
          static_assert(std::is_same_v<T, spec::Literal>);
          return c.graph;
        }
      },
      s.node);
}

}  // namespace detail

inline Graph build(const ConstructionSpec& s) { return detail::build_node(s); }
inline Graph build(const SpecPtr& s) { return detail::build_ptr(s); }

// Short human-readable name, e.g. "H(7,5,2)" or "K3+K2".
inline std::string describe(const ConstructionSpec& s);
inline std::string describe(const SpecPtr& s) { return s ? describe(*s) : "null"; }

inline std::string describe(const ConstructionSpec& s) {
  auto args = [](std::initializer_list<int> xs) {
    std::string out = "(";
    bool first = true;
    for (int x : xs) {
      if (!first) out += ",";
      out += std::to_string(x);
      first = false;
    }
    return out + ")";
  };
  return std::visit(
      [&](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, spec::Empty>) return "E" + std::to_string(c.n);
        else if constexpr (std::is_same_v<T, spec::Complete>) return "K" + std::to_string(c.n);
        else if constexpr (std::is_same_v<T, spec::Path>) return "P" + std::to_string(c.k);
        else if constexpr (std::is_same_v<T, spec::Star>) return "S" + std::to_string(c.r);
        else if constexpr (std::is_same_v<T, spec::Matching>) return "M" + std::to_string(c.k);
        else if constexpr (std::is_same_v<T, spec::Cycle>) return "C" + std::to_string(c.n);
        else if constexpr (std::is_same_v<T, spec::TuranGraph>) return "T" + args({c.n, c.k});
        else if constexpr (std::is_same_v<T, spec::SplitH>) return "H" + args({c.n, c.k, c.a});
        else if constexpr (std::is_same_v<T, spec::FaudreeSchelpG>) return "G" + args({c.n, c.k, c.l});
        else if constexpr (std::is_same_v<T, spec::Friendship>) return "F" + args({c.n});
        else if constexpr (std::is_same_v<T, spec::CliqueUnion>) return "CU" + args({c.a, c.k, c.b});
        else if constexpr (std::is_same_v<T, spec::DisjointUnion>) {
          std::string out;
          for (const auto& p : c.parts) {
            if (!out.empty()) out += "+";
            out += "(" + describe(p) + ")";
          }
          return out.empty() ? "E0" : out;
        } else if constexpr (std::is_same_v<T, spec::Join>) {
          return "(" + describe(c.left) + ")*(" + describe(c.right) + ")";
        } else if constexpr (std::is_same_v<T, spec::Complement>) {
          return "~(" + describe(c.base) + ")";
        } else if constexpr (std::is_same_v<T, spec::PartialBlowup>) {
          std::string u;
          for (int x : c.blown) u += (u.empty() ? "" : ",") + std::to_string(x);
          return "blowup(" + describe(c.base) + ",{" + u + "}," + std::to_string(c.m) + ")";
        } else {
          return "g6:" + serialize_graph6(c.graph);
        }
      },
      s.node);
}

}  // namespace turanlab
