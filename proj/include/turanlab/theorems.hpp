#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/checked.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/matching.hpp"

namespace turanlab {

enum class TheoremId {
  PROP1_UB,
  LEMMA2,
  PROP3_STRICT,
  PROP4_I,
  PROP4_II,
  STAR_THM,
  FAUDREE_SCHELP,
  PATH_THM,
  TAU_PROP,
  MINDEG_PROP,
  LIU_ZHANG,
  B_PARAM_AGREE,
};

inline constexpr std::pair<TheoremId, std::string_view> kTheoremNames[] = {
    {TheoremId::PROP1_UB, "PROP1_UB"},         {TheoremId::LEMMA2, "LEMMA2"},
    {TheoremId::PROP3_STRICT, "PROP3_STRICT"}, {TheoremId::PROP4_I, "PROP4_I"},
    {TheoremId::PROP4_II, "PROP4_II"},         {TheoremId::STAR_THM, "STAR_THM"},
    {TheoremId::FAUDREE_SCHELP, "FAUDREE_SCHELP"}, {TheoremId::PATH_THM, "PATH_THM"},
    {TheoremId::TAU_PROP, "TAU_PROP"},         {TheoremId::MINDEG_PROP, "MINDEG_PROP"},
    {TheoremId::LIU_ZHANG, "LIU_ZHANG"},       {TheoremId::B_PARAM_AGREE, "B_PARAM_AGREE"},
};

inline std::string_view to_string(TheoremId id) {
  for (auto [k, name] : kTheoremNames)
    if (k == id) return name;
  return "?";
}

inline std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  for (auto [k, n] : kTheoremNames)
    if (n == name) return k;
  return std::nullopt;
}

enum class Status { HOLDS, FAILS, HOLDS_FROM };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::HOLDS: return "HOLDS";
    case Status::FAILS: return "FAILS";
    case Status::HOLDS_FROM: return "HOLDS_FROM";
  }
  return "?";
}

// One compared case: `expected` is the closed form or bound, `observed` the
// oracle side.
struct DetailRow {
  std::string label;
  int n = 0;
  Count expected = 0;
  Count observed = 0;
  bool holds = false;
  std::string witness;  // graph6, set when the case fails
  std::string note;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::PROP1_UB;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::HOLDS;
  std::optional<int> holds_from;  // least n from which every case holds
  std::string witness;            // graph6 of the first failure, FAILS only
  std::vector<DetailRow> details;

  bool failed() const { return status == Status::FAILS; }
};

namespace detail {

// Every case must hold.
inline void settle_exact(VerificationReport& r) {
  r.status = Status::HOLDS;
  for (const auto& row : r.details)
    if (!row.holds) {
      r.status = Status::FAILS;
      r.witness = row.witness;
      return;
    }
}

// "For n sufficiently large": the least n0 such that every case with n >= n0
// holds. A failure at the top of the range is FAILS.
inline void settle_threshold(VerificationReport& r) {
  if (r.details.empty()) {
    r.status = Status::HOLDS;
    return;
  }
  std::map<int, bool> by_n;
  for (const auto& row : r.details) {
    auto [it, fresh] = by_n.emplace(row.n, row.holds);
    if (!fresh) it->second = it->second && row.holds;
  }
  std::optional<int> n0;
  for (auto it = by_n.rbegin(); it != by_n.rend() && it->second; ++it) n0 = it->first;
  if (!n0) {
    r.status = Status::FAILS;
    for (auto it = r.details.rbegin(); it != r.details.rend(); ++it)
      if (!it->holds) {
        r.witness = it->witness;
        break;
      }
    return;
  }
  r.holds_from = *n0;
  r.status = *n0 == by_n.begin()->first ? Status::HOLDS : Status::HOLDS_FROM;
}

inline std::string label_nt(int n, int t) { return "n=" + std::to_string(n) + ",t=" + std::to_string(t); }

// Fills holds/witness for an equality case.
inline DetailRow equality_row(std::string label, int n, Count formula, const ExtremalResult& oracle,
                              const Graph& construction, std::string note = {}) {
  DetailRow row{std::move(label), n, formula, oracle.value, formula == oracle.value, {}, std::move(note)};
  if (oracle.value > formula && !oracle.extremal.empty()) row.witness = oracle.extremal.front();
  if (oracle.value < formula) row.witness = serialize_graph6(construction);
  return row;
}

inline Graph matching_graph(int t) { return build(matching_spec(t)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Paths: closed form and the extremal graph list.

struct PathExtremal {
  Count value = 0;
  int a = 0;  // number of K_{k-1} blocks
  int b = 0;  // residual clique, 0 <= b <= k - 2
  std::vector<SpecPtr> extremal;
};

// ex(n, P_k) = a C(k-1, 2) + C(b, 2) for n = a(k-1) + b with b <= k - 2.
// For even k the graphs G_{n,k,l}, 0 <= l < a, tie exactly when
// b is k/2 - 1 or k/2; G_{n,k,a} coincides with a K_{k-1} + K_b.
inline PathExtremal faudree_schelp_value(int n, int k) {
  if (k < 3 || n < 1) throw InvalidParams("faudree_schelp_value requires k >= 3 and n >= 1");
  PathExtremal out;
  out.a = n / (k - 1);
  out.b = n % (k - 1);
  out.value = checked_add(checked_mul(static_cast<Count>(out.a), binomial(k - 1, 2)), binomial(out.b, 2));
  out.extremal.push_back(clique_union_spec(out.a, k, out.b));
  if (k % 2 == 0 && (out.b == k / 2 - 1 || out.b == k / 2))
    for (int l = 0; l < out.a; ++l) out.extremal.push_back(faudree_schelp_spec(n, k, l));
  return out;
}

inline VerificationReport verify_faudree_schelp(int n_max, int k, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::FAUDREE_SCHELP;
  r.params = {{"n_max", std::to_string(n_max)}, {"k", std::to_string(k)}};
  const Graph pk = build(path_spec(k));
  for (int n = 1; n <= n_max; ++n) {
    const PathExtremal fs = faudree_schelp_value(n, k);
    const ExtremalResult oracle = ex_brute_matchings(n, pk, 1, opt)[0];
    std::set<std::string> listed;
    for (const auto& s : fs.extremal) listed.insert(canonical_graph6(build(s)));
    const std::set<std::string> found(oracle.extremal.begin(), oracle.extremal.end());
    DetailRow row = detail::equality_row("n=" + std::to_string(n) + ",k=" + std::to_string(k), n, fs.value, oracle,
                                         build(fs.extremal.front()));
    row.note = "extremal graphs: " + std::to_string(found.size());
    if (listed != found) {
      row.holds = false;
      row.note += ", list mismatch (" + std::to_string(listed.size()) + " listed)";
      for (const auto& g6 : found)
        if (!listed.count(g6)) {
          row.witness = g6;
          break;
        }
      if (row.witness.empty()) row.witness = *listed.begin();
    }
    r.details.push_back(std::move(row));
  }
  detail::settle_exact(r);
  return r;
}

// ---------------------------------------------------------------------------
// Forbidden K_2 + P_3 and 2P_3.

inline Graph k2_p3() { return build(union_spec({complete_spec(2), path_spec(3)})); }
inline Graph two_p3() { return build(union_spec({path_spec(3), path_spec(3)})); }

// Candidates {K_4, M_{n/2}}, both padded with isolated vertices. Needs n >= 4
// so that K_4 is an n-vertex candidate.
inline std::vector<SpecPtr> prop4_i_family(int n) {
  return {union_spec({complete_spec(4), empty_spec(n - 4)}), union_spec({matching_spec(n / 2), empty_spec(n % 2)})};
}

// Candidates K_5 + M_{(n-5)/2}, K_4 + M_{(n-4)/2} (when they fit) and F_n.
inline std::vector<SpecPtr> prop4_ii_family(int n) {
  std::vector<SpecPtr> fam;
  if (n >= 5) fam.push_back(union_spec({complete_spec(5), matching_spec((n - 5) / 2), empty_spec((n - 5) % 2)}));
  if (n >= 4) fam.push_back(union_spec({complete_spec(4), matching_spec((n - 4) / 2), empty_spec((n - 4) % 2)}));
  fam.push_back(friendship_spec(n));
  return fam;
}

inline VerificationReport verify_prop4_i(int n_max, int t_max, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::PROP4_I;
  r.params = {{"n_max", std::to_string(n_max)}, {"t_max", std::to_string(t_max)}, {"n_min", "4"}};
  const Graph f = k2_p3();
  for (int n = 4; n <= n_max; ++n) {
    const auto oracle = ex_brute_matchings(n, f, t_max, opt);
    const auto family = prop4_i_family(n);
    for (int t = 1; t <= t_max; ++t) {
      const FamilyMax fm = ex_over_family(n, detail::matching_graph(t), family);
      const Count k4 = matching_profile(build(family[0]))[t];
      const Count mt = matching_profile(build(family[1]))[t];
      std::string note = k4 > mt ? "K4 wins" : (k4 == mt ? "tie" : "matching wins");
      r.details.push_back(detail::equality_row(detail::label_nt(n, t), n, fm.value, oracle[static_cast<std::size_t>(t - 1)],
                                               pad_to(build(fm.spec), n), note));
    }
  }
  detail::settle_exact(r);
  return r;
}

inline VerificationReport verify_prop4_ii(int n_max, int t_max, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::PROP4_II;
  r.params = {{"n_max", std::to_string(n_max)}, {"t_max", std::to_string(t_max)}, {"n_min", "1"}};
  const Graph f = two_p3();
  for (int n = 1; n <= n_max; ++n) {
    const auto oracle = ex_brute_matchings(n, f, t_max, opt);
    const auto family = prop4_ii_family(n);
    for (int t = 1; t <= t_max; ++t) {
      const FamilyMax fm = ex_over_family(n, detail::matching_graph(t), family);
      r.details.push_back(detail::equality_row(detail::label_nt(n, t), n, fm.value, oracle[static_cast<std::size_t>(t - 1)],
                                               pad_to(build(fm.spec), n), "argmax " + describe(fm.spec)));
    }
  }
  detail::settle_exact(r);
  return r;
}

// ---------------------------------------------------------------------------
// Forbidden stars.

// Every degree d, or all but one of degree d and that one of degree d - 1.
inline bool almost_regular(const Graph& g, int d) {
  int low = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == d) continue;
    if (g.degree(v) == d - 1 && ++low == 1) continue;
    return false;
  }
  return true;
}

struct StarScan {
  Count oracle = 0;          // max over all S_r-free graphs
  Count almost_regular = 0;  // max over almost (r-1)-regular ones
  std::optional<Count> other;  // max over the rest, if any
  std::string best_other;      // a maximiser among the rest
  std::uint64_t searched = 0;
};

inline StarScan star_scan(int n, int r, int t, const EnumerationOptions& base = {}) {
  EnumerationOptions opt = base;
  opt.prune = build(star_spec(r));
  auto better_other = [](const StarScan& a, Count v, const std::string& g6) {
    return !a.other || v > *a.other || (v == *a.other && g6 < a.best_other);
  };
  return fold_graphs(
      n, opt, StarScan{},
      [&](StarScan& acc, const Graph& g) {
        ++acc.searched;
        const Count c = matching_profile(g)[t];
        acc.oracle = std::max(acc.oracle, c);
        if (almost_regular(g, r - 1)) {
          acc.almost_regular = std::max(acc.almost_regular, c);
        } else if (std::string g6 = serialize_graph6(g); better_other(acc, c, g6)) {
          acc.other = c;
          acc.best_other = std::move(g6);
        }
      },
      [&](StarScan& a, StarScan&& b) {
        a.searched += b.searched;
        a.oracle = std::max(a.oracle, b.oracle);
        a.almost_regular = std::max(a.almost_regular, b.almost_regular);
        if (b.other && better_other(a, *b.other, b.best_other)) {
          a.other = b.other;
          a.best_other = std::move(b.best_other);
        }
      });
}

// Per n >= r: the oracle max is attained by an almost (r-1)-regular graph,
// and every other S_r-free graph falls strictly below it.
inline VerificationReport verify_star(int n_max, int r, int t, const EnumerationOptions& opt = {}) {
  if (r < 2 || t < 1) throw InvalidParams("verify_star requires r >= 2 and t >= 1");
  VerificationReport rep;
  rep.theorem = TheoremId::STAR_THM;
  rep.params = {{"n_max", std::to_string(n_max)}, {"r", std::to_string(r)}, {"t", std::to_string(t)}};
  for (int n = r; n <= n_max; ++n) {
    const StarScan s = star_scan(n, r, t, opt);
    const bool attained = s.oracle == s.almost_regular;
    const bool strict = !s.other || *s.other < s.oracle;
    DetailRow row{"n=" + std::to_string(n) + ",r=" + std::to_string(r) + ",t=" + std::to_string(t),
                  n, s.almost_regular, s.oracle, attained && strict, {}, {}};
    row.note = std::string(attained ? "attained" : "not attained") + ", " +
               (strict ? "others strictly below" : "another graph ties or wins");
    if (!row.holds) row.witness = s.best_other;
    rep.details.push_back(std::move(row));
  }
  detail::settle_threshold(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Forbidden paths, counting matchings.

inline VerificationReport verify_path(int n_max, int k, int t, const EnumerationOptions& opt = {}) {
  if (k < 3 || t < 1) throw InvalidParams("verify_path requires k >= 3 and t >= 1");
  VerificationReport r;
  r.theorem = TheoremId::PATH_THM;
  r.params = {{"n_max", std::to_string(n_max)}, {"k", std::to_string(k)}, {"t", std::to_string(t)}};
  const Graph pk = build(path_spec(k));
  for (int n = 1; n <= n_max; ++n) {
    const PathExtremal fs = faudree_schelp_value(n, k);
    const Graph cu = build(fs.extremal.front());
    const ExtremalResult oracle = ex_brute_matchings(n, pk, t, opt)[static_cast<std::size_t>(t - 1)];
    r.details.push_back(detail::equality_row(detail::label_nt(n, t) + ",k=" + std::to_string(k), n,
                                             matching_profile(cu)[t], oracle, cu));
  }
  detail::settle_threshold(r);
  return r;
}

// ---------------------------------------------------------------------------
// Forbidden matchings.

inline bool is_complete_multipartite(const Graph& h) {
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (!h.has_edge(u, v) && h.neighbors(u) != h.neighbors(v)) return false;
  return true;
}

namespace detail {

inline Graph split_extremal(int n, int s) { return build(split_h_spec(n, 2 * s - 1, s - 1)); }
inline Graph clique_extremal(int n, int s) { return pad_to(build(complete_spec(2 * s - 1)), n); }

inline VerificationReport forbidden_matching_report(TheoremId id, const Graph& h, int s, int n_max, bool threshold,
                                                    const std::vector<std::pair<std::string, std::string>>& extra,
                                                    auto&& formula, const EnumerationOptions& opt) {
  VerificationReport r;
  r.theorem = id;
  r.params = {{"h", serialize_graph6(h)}, {"s", std::to_string(s)}, {"n_max", std::to_string(n_max)}};
  r.params.insert(r.params.end(), extra.begin(), extra.end());
  const Graph ms = matching_graph(s);
  const CopyCounter counter(h);
  for (int n = 2 * s - 1; n <= n_max; ++n) {
    const ExtremalResult oracle = ex_brute(n, h, ms, opt);
    auto [value, construction] = formula(n, counter);
    r.details.push_back(equality_row("n=" + std::to_string(n) + ",s=" + std::to_string(s), n, value, oracle, construction));
  }
  if (threshold)
    settle_threshold(r);
  else
    settle_exact(r);
  return r;
}

}  // namespace detail

// tau(H) <= s - 1: ex(n, H, M_s) = N(H, H(n, 2s-1, s-1)) for large n.
inline VerificationReport verify_tau_prop(const Graph& h, int s, int n_max, const EnumerationOptions& opt = {}) {
  if (s < 1) throw InvalidParams("s must be positive");
  if (h.order() == 0 || h.min_degree() == 0) throw InvalidParams("H must have no isolated vertices");
  if (vertex_cover_number(h) > s - 1) throw InvalidParams("requires tau(H) <= s - 1");
  return detail::forbidden_matching_report(
      TheoremId::TAU_PROP, h, s, n_max, true, {},
      [&](int n, const CopyCounter& c) {
        Graph g = detail::split_extremal(n, s);
        return std::pair{c(g), g};
      },
      opt);
}

// Minimum degree conditions; no threshold, every n >= 2s - 1 must match.
inline VerificationReport verify_mindeg_prop(const Graph& h, int s, int n_max, const EnumerationOptions& opt = {}) {
  if (s < 1) throw InvalidParams("s must be positive");
  int low = 0;
  bool below = false;
  for (int v = 0; v < h.order(); ++v) {
    if (h.degree(v) == s - 1)
      ++low;
    else if (h.degree(v) < s - 1)
      below = true;
  }
  if (h.order() == 0 || below || low > 1)
    throw InvalidParams("requires every degree >= s, except at most one vertex of degree s - 1");
  const bool case_two = low == 1;
  return detail::forbidden_matching_report(
      TheoremId::MINDEG_PROP, h, s, n_max, false, {{"case", case_two ? "ii" : "i"}},
      [&](int n, const CopyCounter& c) {
        Graph clique = detail::clique_extremal(n, s);
        Count best = c(clique);
        if (case_two) {
          Graph split = detail::split_extremal(n, s);
          if (Count v = c(split); v > best) return std::pair{v, split};
        }
        return std::pair{best, clique};
      },
      opt);
}

// Complete multipartite H, every n >= 2s - 1:
// ex(n, H, M_s) = max{N(H, K_{2s-1}), N(H, H(n, 2s-1, s-1))}.
inline VerificationReport verify_liu_zhang(const Graph& h, int s, int n_max, const EnumerationOptions& opt = {}) {
  if (s < 1) throw InvalidParams("s must be positive");
  if (!is_complete_multipartite(h)) throw InvalidParams("H must be complete multipartite");
  return detail::forbidden_matching_report(
      TheoremId::LIU_ZHANG, h, s, n_max, false, {},
      [&](int n, const CopyCounter& c) {
        Graph clique = detail::clique_extremal(n, s);
        Graph split = detail::split_extremal(n, s);
        Count a = c(clique), b = c(split);
        return a >= b ? std::pair{a, clique} : std::pair{b, split};
      },
      opt);
}

// ---------------------------------------------------------------------------
// Counting inequalities.

struct InequalityCheck {
  Count lhs = 0;
  Count rhs = 0;
  bool holds = false;
  Count margin() const { return rhs >= lhs ? rhs - lhs : 0; }
};

// t! ex(n, M_t, F) <= ex(n, F)^t.
inline InequalityCheck check_prop1_upper(int n, int t, const Graph& f, const EnumerationOptions& opt = {}) {
  if (t < 1) throw InvalidParams("t must be positive");
  const auto res = ex_brute_matchings(n, f, t, opt);
  InequalityCheck c;
  c.lhs = checked_mul(factorial(t), res[static_cast<std::size_t>(t - 1)].value);
  c.rhs = checked_pow(res[0].value, t);
  c.holds = c.lhs <= c.rhs;
  return c;
}

inline VerificationReport verify_prop1(int n_max, int t_max, const Graph& f, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::PROP1_UB;
  r.params = {{"f", serialize_graph6(f)}, {"n_max", std::to_string(n_max)}, {"t_max", std::to_string(t_max)}};
  for (int n = 1; n <= n_max; ++n) {
    const auto res = ex_brute_matchings(n, f, t_max, opt);
    for (int t = 1; t <= t_max; ++t) {
      const Count lhs = checked_mul(factorial(t), res[static_cast<std::size_t>(t - 1)].value);
      const Count rhs = checked_pow(res[0].value, t);
      DetailRow row{detail::label_nt(n, t), n, rhs, lhs, lhs <= rhs, {}, "t! ex(n,M_t,F) <= ex(n,F)^t"};
      if (!row.holds) row.witness = res[static_cast<std::size_t>(t - 1)].extremal.front();
      r.details.push_back(std::move(row));
    }
  }
  detail::settle_exact(r);
  return r;
}

inline bool is_forest(const Graph& f) {
  return f.edge_count() == f.order() - static_cast<int>(f.components().size());
}

// Strict t! ex(n, M_t, F) < ex(n, F)^t for a forest F whose components each
// have fewer extremal edges than F at this n.
inline InequalityCheck check_prop3_strict(const Graph& f, int t, int n, const EnumerationOptions& opt = {}) {
  if (t < 2) throw InvalidParams("requires t >= 2");
  if (!is_forest(f) || f.min_degree() == 0) throw InvalidParams("requires a forest without isolated vertices");
  const auto res = ex_brute_matchings(n, f, t, opt);
  const Count ex_f = res[0].value;
  const Graph k2 = build(complete_spec(2));
  for (VertexSet comp : f.components()) {
    if (ex_brute(n, k2, f.induced(comp), opt).value >= ex_f)
      throw InvalidParams("a component of F has as many extremal edges as F at n = " + std::to_string(n));
  }
  InequalityCheck c;
  c.lhs = checked_mul(factorial(t), res[static_cast<std::size_t>(t - 1)].value);
  c.rhs = checked_pow(ex_f, t);
  c.holds = c.lhs < c.rhs;
  return c;
}

inline VerificationReport verify_prop3(const Graph& f, int t, const std::vector<int>& ns, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::PROP3_STRICT;
  r.params = {{"f", serialize_graph6(f)}, {"t", std::to_string(t)}};
  for (int n : ns) {
    const InequalityCheck c = check_prop3_strict(f, t, n, opt);
    r.details.push_back({detail::label_nt(n, t), n, c.rhs, c.lhs, c.holds, {}, "margin " + std::to_string(c.margin())});
  }
  detail::settle_exact(r);
  return r;
}

// t! N(M_t, G) <= d (|E| - d)^(t-1) + (|E| - d) |E|^(t-1), d = min degree.
inline InequalityCheck check_lemma2(const Graph& g, int t) {
  if (t < 2) throw InvalidParams("requires t >= 2");
  const int d = g.min_degree();
  if (g.order() == 0 || d < 1) throw InvalidParams("requires minimum degree >= 1");
  const auto e = static_cast<Count>(g.edge_count());
  const auto dd = static_cast<Count>(d);
  InequalityCheck c;
  c.lhs = checked_mul(factorial(t), matching_profile(g)[t]);
  c.rhs = checked_add(checked_mul(dd, checked_pow(e - dd, t - 1)), checked_mul(e - dd, checked_pow(e, t - 1)));
  c.holds = c.lhs <= c.rhs;
  return c;
}

namespace detail {

struct TallyAcc {
  Count checked = 0;
  Count passed = 0;
  std::string first_failure;
};

inline void merge_tally(TallyAcc& a, TallyAcc&& b) {
  a.checked += b.checked;
  a.passed += b.passed;
  if (!b.first_failure.empty() && (a.first_failure.empty() || b.first_failure < a.first_failure))
    a.first_failure = std::move(b.first_failure);
}

inline DetailRow tally_row(std::string label, int n, const TallyAcc& acc, std::string note) {
  return {std::move(label), n, acc.checked, acc.passed, acc.checked == acc.passed, acc.first_failure, std::move(note)};
}

}  // namespace detail

// Degree-sum chain over every graph with n <= n_max vertices and no isolated vertex.
inline VerificationReport verify_lemma2(int n_max, const std::vector<int>& ts, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::LEMMA2;
  std::string tl;
  for (int t : ts) tl += (tl.empty() ? "" : ",") + std::to_string(t);
  r.params = {{"n_max", std::to_string(n_max)}, {"t", tl}};
  for (int n = 2; n <= n_max; ++n)
    for (int t : ts) {
      EnumerationOptions o = opt;
      o.prune.reset();
      auto acc = fold_graphs(
          n, o, detail::TallyAcc{},
          [&](detail::TallyAcc& a, const Graph& g) {
            if (g.min_degree() < 1) return;
            ++a.checked;
            if (check_lemma2(g, t).holds) {
              ++a.passed;
            } else if (std::string g6 = serialize_graph6(g); a.first_failure.empty() || g6 < a.first_failure) {
              a.first_failure = g6;
            }
          },
          detail::merge_tally);
      r.details.push_back(detail::tally_row(detail::label_nt(n, t), n, acc, "graphs checked vs passed"));
    }
  detail::settle_exact(r);
  return r;
}

// Both characterisations of b(H, s) over every H on 1..h_max vertices, plus
// b = alpha(H) whenever tau(H) <= s - 1.
inline VerificationReport verify_b_param(int h_max, int s_max, const EnumerationOptions& opt = {}) {
  VerificationReport r;
  r.theorem = TheoremId::B_PARAM_AGREE;
  r.params = {{"h_max", std::to_string(h_max)}, {"s_max", std::to_string(s_max)}};
  for (int n = 1; n <= h_max; ++n)
    for (int s = 1; s <= s_max; ++s) {
      EnumerationOptions o = opt;
      o.prune.reset();
      auto acc = fold_graphs(
          n, o, detail::TallyAcc{},
          [&](detail::TallyAcc& a, const Graph& h) {
            ++a.checked;
            const StructureParams p = structure_params(h, s);
            bool ok = p.b == b_param_blowup(h, s, 2 * s);
            if (p.tau <= s - 1) ok = ok && p.b == p.alpha;
            ok = ok && p.tau + p.alpha == h.order() && (!p.b || *p.b <= p.alpha);
            if (ok) {
              ++a.passed;
            } else if (std::string g6 = serialize_graph6(h); a.first_failure.empty() || g6 < a.first_failure) {
              a.first_failure = g6;
            }
          },
          detail::merge_tally);
      r.details.push_back(detail::tally_row("n=" + std::to_string(n) + ",s=" + std::to_string(s), n, acc,
                                            "graphs checked vs agreeing"));
    }
  detail::settle_exact(r);
  return r;
}

}  // namespace turanlab
