#pragma once

#include <string>
#include <string_view>

#include "turanlab/error.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// graph6: order N(n) then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// in 6-bit big-endian groups, each printed as value + 63. Orders 0..62 use
// one byte; 63..258047 use '~' and three bytes.

inline std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedEncoding("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw MalformedEncoding("graph6 byte outside 63..126");

  auto value = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw SizeCap("graph6 order above 258047");
    if (text.size() < 4) throw MalformedEncoding("truncated graph6 order");
    n = (static_cast<long>(value(1)) << 12) | (value(2) << 6) | value(3);
    if (n < 63) throw MalformedEncoding("non-minimal graph6 order encoding");
    pos = 4;
  }
  if (n > kMaxVertices) throw SizeCap("graph6 order " + std::to_string(n) + " exceeds 64");

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw MalformedEncoding("graph6 length " + std::to_string(text.size()) + ", expected " +
                            std::to_string(expected));

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = value(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = value(expected - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw MalformedEncoding("nonzero graph6 padding bits");
  }
  return g;
}

}  // namespace turanlab
