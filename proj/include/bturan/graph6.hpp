#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "bturan/errors.hpp"
#include "bturan/graph.hpp"

namespace bturan {

// graph6, single-byte order form only (1 <= n <= 62). The body is the upper
// triangle in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian into 6-bit groups, each offset by 63.

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > 62) throw InvalidParameter("graph6 encoding supports 1..62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedInput("empty graph6 string");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw MalformedInput("graph6 byte out of range 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 1 || n > 62) throw MalformedInput("unsupported graph6 order byte");
  const int bits = n * (n - 1) / 2;
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - 1 != groups) {
    throw MalformedInput("graph6 body has " + std::to_string(text.size() - 1) + " bytes, expected " +
                         std::to_string(groups));
  }
  std::vector<VertexSet> rows(n, 0);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((group >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw MalformedInput("graph6 padding bits are not zero");
  }
  return Graph::from_rows(rows);
}

/// Reads one graph per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace bturan
