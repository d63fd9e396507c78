#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/expr.hpp"
#include "turanlab/theorems.hpp"

namespace turanlab {

// Optional overrides; anything unset falls back to the default box of the
// chosen statement.
struct VerifyRequest {
  std::optional<int> n_max;
  std::optional<int> t_max;
  std::optional<int> t;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> s;
  std::optional<std::string> h;  // graph expression
  std::optional<std::string> f;  // graph expression
};

namespace detail {

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline NamedGraph named(const std::string& text) { return {text, graph_from_source(text)}; }

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// Replaces graph6 parameter values by the expression the caller used.
inline void rename_param(VerificationReport& r, const std::string& key, const std::string& value) {
  for (auto& [k, v] : r.params)
    if (k == key) v = value;
}

inline std::vector<std::pair<NamedGraph, int>> pattern_pairs(const VerifyRequest& q,
                                                             std::vector<std::pair<std::string, int>> defaults) {
  std::vector<std::pair<NamedGraph, int>> out;
  if (q.h) {
    out.emplace_back(named(*q.h), q.s.value_or(2));
    return out;
  }
  for (auto& [h, s] : defaults)
    if (!q.s || *q.s == s) out.emplace_back(named(h), s);
  return out;
}

}  // namespace detail

inline std::vector<VerificationReport> run_verification(TheoremId id, const VerifyRequest& q,
                                                        const EnumerationOptions& opt = {}) {
  using detail::named;
  using detail::range;
  std::vector<VerificationReport> out;
  auto push = [&](VerificationReport r, const std::string& key, const std::string& name) {
    if (!key.empty()) detail::rename_param(r, key, name);
    out.push_back(std::move(r));
  };
  switch (id) {
    case TheoremId::PROP1_UB: {
      std::vector<std::string> fs = q.f ? std::vector<std::string>{*q.f}
                                        : std::vector<std::string>{"P3", "P4", "S3", "K3", "K2+P3"};
      for (const auto& text : fs) {
        auto f = named(text);
        push(verify_prop1(q.n_max.value_or(8), q.t_max.value_or(3), f.graph, opt), "f", f.name);
      }
      break;
    }
    case TheoremId::LEMMA2: {
      std::vector<int> ts = q.t ? std::vector<int>{*q.t} : range(2, q.t_max.value_or(3));
      push(verify_lemma2(q.n_max.value_or(7), ts, opt), "", "");
      break;
    }
    case TheoremId::PROP3_STRICT: {
      auto f = named(q.f.value_or("2P3"));
      std::vector<int> ns = q.n_max ? std::vector<int>{*q.n_max} : std::vector<int>{8, 9};
      push(verify_prop3(f.graph, q.t.value_or(2), ns, opt), "f", f.name);
      break;
    }
    case TheoremId::PROP4_I:
      push(verify_prop4_i(q.n_max.value_or(9), q.t_max.value_or(3), opt), "", "");
      break;
    case TheoremId::PROP4_II:
      push(verify_prop4_ii(q.n_max.value_or(9), q.t_max.value_or(3), opt), "", "");
      break;
    case TheoremId::STAR_THM: {
      std::vector<int> rs = q.r ? std::vector<int>{*q.r} : std::vector<int>{3, 4};
      std::vector<int> ts = q.t ? std::vector<int>{*q.t} : range(1, q.t_max.value_or(3));
      for (int r : rs)
        for (int t : ts) push(verify_star(q.n_max.value_or(8), r, t, opt), "", "");
      break;
    }
    case TheoremId::FAUDREE_SCHELP: {
      std::vector<int> ks = q.k ? std::vector<int>{*q.k} : range(3, 6);
      for (int k : ks) push(verify_faudree_schelp(q.n_max.value_or(9), k, opt), "", "");
      break;
    }
    case TheoremId::PATH_THM: {
      std::vector<int> ks = q.k ? std::vector<int>{*q.k} : std::vector<int>{4, 5};
      for (int k : ks) push(verify_path(q.n_max.value_or(9), k, q.t.value_or(2), opt), "", "");
      break;
    }
    case TheoremId::TAU_PROP:
      for (auto& [h, s] : detail::pattern_pairs(q, {{"S3", 2}, {"P3", 2}}))
        push(verify_tau_prop(h.graph, s, q.n_max.value_or(9), opt), "h", h.name);
      break;
    case TheoremId::MINDEG_PROP:
      for (auto& [h, s] : detail::pattern_pairs(q, {{"K3", 2}, {"K4", 3}}))
        push(verify_mindeg_prop(h.graph, s, q.n_max.value_or(9), opt), "h", h.name);
      break;
    case TheoremId::LIU_ZHANG:
      for (auto& [h, s] : detail::pattern_pairs(q, {{"S3", 2}, {"P3", 2}, {"K3", 2}, {"K4", 3}}))
        push(verify_liu_zhang(h.graph, s, q.n_max.value_or(9), opt), "h", h.name);
      break;
    case TheoremId::B_PARAM_AGREE:
      push(verify_b_param(q.n_max.value_or(6), q.s.value_or(3), opt), "", "");
      break;
  }
  return out;
}

// Every statement in identifier order.
inline std::vector<VerificationReport> run_all_verifications(const VerifyRequest& q,
                                                             const EnumerationOptions& opt = {}) {
  std::vector<VerificationReport> out;
  for (auto [id, name] : kTheoremNames) {
    auto part = run_verification(id, q, opt);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace turanlab
