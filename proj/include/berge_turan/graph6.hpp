#pragma once

#include <string>
#include <string_view>

#include "berge_turan/error.hpp"
#include "berge_turan/graph.hpp"

namespace berge_turan {

/// graph6 encoding: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2)
/// x(0,3) ... packed six bits per byte, each byte offset by 63.
inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

inline Graph graph6_decode(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty graph6 string");

  auto sextet = [&](std::size_t pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw InvalidInput("invalid graph6 byte in '" + std::string(text) + "'");
    return c - 63;
  };

  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sextet(0);
    pos = 1;
  } else {
    if (text.size() < 4 || static_cast<unsigned char>(text[1]) == 126) {
      throw InvalidInput("unsupported graph6 order field in '" + std::string(text) + "'");
    }
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw InvalidInput("graph6 order " + std::to_string(n) + " exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InvalidInput("graph6 length mismatch in '" + std::string(text) + "'");
  }
  Graph g(n);
  std::size_t t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const int byte = sextet(pos + t / 6);
      if ((byte >> (5 - t % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0 && (sextet(pos + bytes - 1) & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw InvalidInput("nonzero graph6 padding in '" + std::string(text) + "'");
  }
  return g;
}

}  // namespace berge_turan
