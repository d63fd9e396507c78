#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "turanlab/construction.hpp"
#include "turanlab/error.hpp"
#include "turanlab/graph6.hpp"

// Graph expressions:
//   expr   := term (('+' | '|' | "∪") term)*      disjoint union
//   term   := factor ('*' factor)*                join
//   factor := [count] unary                       count disjoint copies
//   unary  := '~' unary | atom                    complement
//   atom   := '(' expr ')' | "g6:" graph6 | NAME index | FUNC '(' ints ')'
// NAME is K, P, S, M, C, E or F (friendship) followed by an optional '_'
// and an integer, e.g. K4, P_3, S{3}. FUNC is T(n,k), H(n,k,a), G(n,k,l),
// CU(a,k,b), F(n) or K(a,b,...) for a complete multipartite graph.

namespace turanlab {

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  SpecPtr parse() {
    SpecPtr out = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidSpec("graph expression '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  int integer() {
    if (!at_digit()) fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  std::vector<int> int_list() {
    std::vector<int> out{integer()};
    while (eat(",")) out.push_back(integer());
    if (!eat(")")) fail("expected ')'");
    return out;
  }

  SpecPtr expr() {
    std::vector<SpecPtr> parts{term()};
    while (eat("+") || eat("|") || eat("∪")) parts.push_back(term());
    return parts.size() == 1 ? parts.front() : union_spec(std::move(parts));
  }

  SpecPtr term() {
    SpecPtr out = factor();
    while (eat("*")) out = join_spec(out, factor());
    return out;
  }

  SpecPtr factor() {
    if (!at_digit()) return unary();
    const int copies = integer();
    if (copies < 1) fail("multiplier must be positive");
    SpecPtr one = unary();
    if (copies == 1) return one;
    return union_spec(std::vector<SpecPtr>(static_cast<std::size_t>(copies), one));
  }

  SpecPtr unary() {
    if (eat("~")) return complement_spec(unary());
    return atom();
  }

  SpecPtr atom() {
    if (eat("(")) {
      SpecPtr inner = expr();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    if (eat("g6:")) {
      std::size_t end = pos_;
      while (end < s_.size() && s_[end] >= 63 && s_[end] <= 126) ++end;
      Graph g = parse_graph6(s_.substr(pos_, end - pos_));
      pos_ = end;
      return literal_spec(std::move(g));
    }
    skip_ws();
    std::string name;
    while (pos_ < s_.size() && std::isupper(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    if (name.empty()) fail("expected a graph");
    if (eat("(")) return function(name, int_list());
    eat("_");
    int index;
    if (eat("{")) {
      index = integer();
      if (!eat("}")) fail("expected '}'");
    } else {
      index = integer();
    }
    if (name == "K") return complete_spec(index);
    if (name == "P") return path_spec(index);
    if (name == "S") return star_spec(index);
    if (name == "M") return matching_spec(index);
    if (name == "C") return cycle_spec(index);
    if (name == "E") return empty_spec(index);
    if (name == "F") return friendship_spec(index);
    fail("unknown graph family '" + name + "'");
  }

  SpecPtr function(const std::string& name, const std::vector<int>& a) {
    auto arity = [&](std::size_t k) {
      if (a.size() != k) fail(name + " takes " + std::to_string(k) + " arguments");
    };
    if (name == "T") return arity(2), turan_spec(a[0], a[1]);
    if (name == "H") return arity(3), split_h_spec(a[0], a[1], a[2]);
    if (name == "G") return arity(3), faudree_schelp_spec(a[0], a[1], a[2]);
    if (name == "CU") return arity(3), clique_union_spec(a[0], a[1], a[2]);
    if (name == "F") return arity(1), friendship_spec(a[0]);
    if (name == "K") {
      if (a.size() == 1) return complete_spec(a[0]);
      SpecPtr out = empty_spec(a[0]);
      for (std::size_t i = 1; i < a.size(); ++i) out = join_spec(out, empty_spec(a[i]));
      return out;
    }
    fail("unknown function '" + name + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SpecPtr parse_graph_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// A graph expression, or failing that a bare graph6 string. Throws the
// expression error when neither reading works.
inline SpecPtr parse_graph_source(std::string_view text) {
  try {
    return parse_graph_expr(text);
  } catch (const InvalidSpec&) {
    try {
      return literal_spec(parse_graph6(text));
    } catch (const Error&) {
    }
    throw;
  }
}

// Parses and builds, so construction errors surface as InvalidSpec too.
inline Graph graph_from_source(std::string_view text) { return build(parse_graph_source(text)); }

}  // namespace turanlab
