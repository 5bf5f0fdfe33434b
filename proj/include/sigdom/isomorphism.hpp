#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <tuple>
#include <vector>

#include "sigdom/graph.hpp"

namespace sigdom {

/// Iterated degree refinement (1-WL). Color ids are ranks of sorted
/// signatures, so equal colors mean the same refinement history across
/// different graphs.
inline std::vector<int> wl_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] = g.degree(v);
  {
    std::vector<int> uniq = col;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (auto& c : col)
      c = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), c) - uniq.begin());
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(col[static_cast<std::size_t>(v)]);
      for (std::uint64_t b = g.adjacency_bits(v); b != 0; b &= b - 1)
        s.push_back(col[static_cast<std::size_t>(std::countr_zero(b))]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      const int c = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) -
          uniq.begin());
      if (c != col[static_cast<std::size_t>(v)]) changed = true;
      col[static_cast<std::size_t>(v)] = c;
    }
    if (!changed) break;
  }
  return col;
}

/// Isomorphism-invariant fingerprint used to bucket graphs before exact tests.
inline std::vector<long long> iso_fingerprint(const Graph& g) {
  const int n = g.order();
  std::vector<long long> fp;
  fp.push_back(n);
  fp.push_back(g.size());
  const std::vector<int> col = wl_colors(g);

  // per-vertex (wl color, triangles at v, distance sum, eccentricity), sorted
  std::vector<std::array<long long, 4>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    long long tri = 0;
    for (std::uint64_t b = g.adjacency_bits(v); b != 0; b &= b - 1)
      tri += std::popcount(g.adjacency_bits(std::countr_zero(b)) & g.adjacency_bits(v));
    tri /= 2;
    long long dist_sum = 0, ecc = 0;
    std::uint64_t seen = std::uint64_t{1} << v;
    std::uint64_t frontier = seen;
    for (int d = 1; frontier != 0; ++d) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1)
        next |= g.adjacency_bits(std::countr_zero(b));
      frontier = next & ~seen;
      seen |= frontier;
      if (frontier != 0) {
        dist_sum += static_cast<long long>(d) * std::popcount(frontier);
        ecc = d;
      }
    }
    rows.push_back({col[static_cast<std::size_t>(v)], tri, dist_sum, ecc});
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) fp.insert(fp.end(), r.begin(), r.end());
  return fp;
}

namespace detail {

struct IsoState {
  const Graph* g;
  const Graph* h;
  const std::vector<int>* col_g;
  const std::vector<int>* col_h;
  std::vector<int> order;    // g's vertices in mapping order
  std::vector<int> map;      // g vertex -> h vertex, -1 if unmapped
  std::uint64_t used_h = 0;
  long long found = 0;
  bool count_all = false;

  bool extend(std::size_t pos) {
    if (pos == order.size()) {
      ++found;
      return !count_all;
    }
    const int v = order[pos];
    for (int w = 0; w < h->order(); ++w) {
      if ((used_h >> w) & 1) continue;
      if ((*col_g)[static_cast<std::size_t>(v)] != (*col_h)[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < pos && ok; ++i)
        ok = g->adjacent(v, order[i]) == h->adjacent(w, map[static_cast<std::size_t>(order[i])]);
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used_h |= std::uint64_t{1} << w;
      if (extend(pos + 1)) return true;
      used_h &= ~(std::uint64_t{1} << w);
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

// Mapping order: start in the rarest color class, then prefer vertices
// adjacent to already-ordered ones so adjacency prunes early.
inline std::vector<int> iso_order(const Graph& g, const std::vector<int>& col) {
  const int n = g.order();
  std::vector<int> class_size(static_cast<std::size_t>(n) + 1, 0);
  for (int c : col) class_size[static_cast<std::size_t>(c)]++;
  std::vector<int> order;
  std::uint64_t placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    bool best_adj = false;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1) continue;
      const bool adj = (g.adjacency_bits(v) & placed) != 0;
      if (best < 0) {
        best = v;
        best_adj = adj;
        continue;
      }
      const auto key = [&](int u, bool a) {
        return std::tuple(!a, class_size[static_cast<std::size_t>(col[static_cast<std::size_t>(u)])],
                          u);
      };
      if (key(v, adj) < key(best, best_adj)) {
        best = v;
        best_adj = adj;
      }
    }
    order.push_back(best);
    placed |= std::uint64_t{1} << best;
  }
  return order;
}

inline long long iso_run(const Graph& g, const Graph& h, bool count_all) {
  if (g.order() != h.order() || g.size() != h.size()) return 0;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return 0;
  const std::vector<int> cg = wl_colors(g);
  const std::vector<int> ch = wl_colors(h);
  std::vector<int> sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return 0;

  IsoState st;
  st.g = &g;
  st.h = &h;
  st.col_g = &cg;
  st.col_h = &ch;
  st.order = iso_order(g, cg);
  st.map.assign(static_cast<std::size_t>(g.order()), -1);
  st.count_all = count_all;
  st.extend(0);
  return st.found;
}

}  // namespace detail

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() == 0) return h.order() == 0;
  return detail::iso_run(g, h, /*count_all=*/false) > 0;
}

inline long long count_automorphisms(const Graph& g) {
  if (g.order() == 0) return 1;
  return detail::iso_run(g, g, /*count_all=*/true);
}

}  // namespace sigdom
