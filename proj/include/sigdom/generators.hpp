#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "sigdom/graph.hpp"

namespace sigdom {

inline Graph path_graph(int n) {
  if (n < 1) throw malformed_input("path: n >= 1 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw malformed_input("cycle: n >= 3 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw malformed_input("complete: n >= 1 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

/// Complete multipartite graph; parts are consecutive vertex blocks.
inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw malformed_input("multipartite: at least one part");
  for (int p : parts)
    if (p < 1) throw malformed_input("multipartite: part sizes >= 1 required");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<std::pair<int, int>> edges;
  int a_start = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    int b_start = a_start + parts[a];
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (int u = a_start; u < a_start + parts[a]; ++u)
        for (int v = b_start; v < b_start + parts[b]; ++v) edges.emplace_back(u, v);
      b_start += parts[b];
    }
    a_start += parts[a];
  }
  return Graph::from_edge_list(n, edges);
}

/// Star K_{1,k}: vertex 0 is the center.
inline Graph star_graph(int leaves) {
  if (leaves < 1) throw malformed_input("star: k >= 1 required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, edges);
}

/// Heawood graph via its LCF description: the 14-cycle plus chords
/// {i, i+5 mod 14} for even i (pattern [5,-5]^7).
inline Graph heawood_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph::from_edge_list(14, edges);
}

}  // namespace sigdom
