#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sigdom/graph.hpp"

namespace sigdom {

// graph6: header byte n+63 (n <= 62), then the upper-triangle bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// each group stored as value+63, zero-padded to a multiple of 6 bits.

inline Graph from_graph6(std::string_view text) {
  if (text.empty()) throw malformed_input("graph6: empty input");
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 126) throw malformed_input("graph6: header byte out of range");
  if (header == 126) throw unsupported_size("graph6: n > 62 not supported");
  const int n = header - 63;
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw malformed_input("graph6: truncated or oversized bit stream");

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int k = 0;  // index into the upper-triangle bit order
  int col = 1, row = 0;
  for (int i = 0; i < nbytes; ++i) {
    const unsigned char b = static_cast<unsigned char>(text[static_cast<std::size_t>(1 + i)]);
    if (b < 63 || b > 126) throw malformed_input("graph6: data byte out of range");
    const unsigned val = b - 63;
    for (int j = 5; j >= 0; --j, ++k) {
      const bool bit = (val >> j) & 1;
      if (k >= nbits) {
        if (bit) throw malformed_input("graph6: nonzero padding");
        continue;
      }
      if (bit) {
        adj[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
        adj[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
      }
      if (++row == col) {
        ++col;
        row = 0;
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw unsupported_size("graph6: n > 62 not supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  unsigned group = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

// Plain-text edge list: first line "n m", then m lines "u v" (0-indexed).

inline Graph read_edge_list_text(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw malformed_input("edge list: missing 'n m' header");
  if (n < 0 || n > kMaxVertices) throw unsupported_size("edge list: vertex count out of range");
  if (m < 0) throw malformed_input("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw malformed_input("edge list: truncated edge lines");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw malformed_input("edge list: endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

inline void write_edge_list_text(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

/// Reads one graph6 string per line; blank lines and '#' comments are skipped.
inline std::vector<std::pair<std::string, Graph>> read_graph6_lines(std::istream& in) {
  std::vector<std::pair<std::string, Graph>> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string token = line.substr(start);
    out.emplace_back(token, from_graph6(token));
  }
  return out;
}

}  // namespace sigdom
