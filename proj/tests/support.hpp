#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rhc/absorber.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/walk.hpp"

namespace rhc::testing {

inline HypergraphSystem complete_system(int k, int n, int m) {
  std::vector<KGraph> graphs;
  Tuple e(static_cast<std::size_t>(k));
  std::vector<Tuple> all;
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      all.push_back(e);
      return;
    }
    for (int v = from; v <= n; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
  for (int c = 0; c < m; ++c) graphs.emplace_back(k, n, all);
  return HypergraphSystem(std::move(graphs));
}

// Window i of a vertex sequence, wrapping when cyclic.
inline Tuple window_of(const std::vector<Vertex>& v, int k, std::size_t i, bool cyclic) {
  Tuple w;
  for (int j = 0; j < k; ++j) w.push_back(v[cyclic ? (i + static_cast<std::size_t>(j)) % v.size() : i + static_cast<std::size_t>(j)]);
  return w;
}

inline bool plain_tight(const HypergraphSystem& s, const std::vector<Vertex>& v, const std::vector<Color>& c, bool cyclic) {
  const int k = s.k();
  const std::size_t windows = cyclic ? v.size() : v.size() + 1 - static_cast<std::size_t>(k);
  if (c.size() != windows) return false;
  if (std::set<Vertex>(v.begin(), v.end()).size() != v.size()) return false;
  if (std::set<Color>(c.begin(), c.end()).size() != c.size()) return false;
  for (std::size_t i = 0; i < windows; ++i)
    if (!s.valid_color(c[i]) || !s.has_edge(c[i], window_of(v, k, i, cyclic))) return false;
  return true;
}

inline bool plain_hamilton(const HypergraphSystem& s, const TightWalk& w) {
  if (!w.is_cycle || static_cast<int>(w.vertices.size()) != s.n()) return false;
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < s.n(); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  return plain_tight(s, w.vertices, w.colors, true);
}

// Every vertex sequence and every colour choice, one window at a time.
inline bool backtrack_hamilton(const HypergraphSystem& s) {
  const int n = s.n(), k = s.k();
  if (s.m() != n || n < k) return false;
  std::vector<Vertex> seq;
  std::vector<char> used_v(static_cast<std::size_t>(n) + 1, 0), used_c(static_cast<std::size_t>(n) + 1, 0);
  std::function<bool(std::size_t)> close = [&](std::size_t from) -> bool {
    if (from == static_cast<std::size_t>(n)) return true;
    Tuple w = window_of(seq, k, from, true);
    for (Color c = 1; c <= n; ++c) {
      if (used_c[static_cast<std::size_t>(c)] || !s.has_edge(c, w)) continue;
      used_c[static_cast<std::size_t>(c)] = 1;
      if (close(from + 1)) return true;
      used_c[static_cast<std::size_t>(c)] = 0;
    }
    return false;
  };
  std::function<bool()> place = [&]() -> bool {
    if (static_cast<int>(seq.size()) == n) return close(static_cast<std::size_t>(n - k + 1));
    for (Vertex v = 1; v <= n; ++v) {
      if (used_v[static_cast<std::size_t>(v)]) continue;
      seq.push_back(v);
      used_v[static_cast<std::size_t>(v)] = 1;
      if (static_cast<int>(seq.size()) < k) {
        if (place()) return true;
      } else {
        Tuple w(seq.end() - k, seq.end());
        for (Color c = 1; c <= n; ++c) {
          if (used_c[static_cast<std::size_t>(c)] || !s.has_edge(c, w)) continue;
          used_c[static_cast<std::size_t>(c)] = 1;
          if (place()) return true;
          used_c[static_cast<std::size_t>(c)] = 0;
        }
      }
      seq.pop_back();
      used_v[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  return place();
}

// Scans every ordered (2k-2)-tuple of vertices and (k-1)-tuple of colours.
inline std::uint64_t brute_absorber_count(const HypergraphSystem& s, const AbsorberTarget& target) {
  const int k = s.k(), n = s.n(), m = s.m();
  const auto* vt = std::get_if<VertexTarget>(&target);
  const auto* et = std::get_if<EndsTarget>(&target);
  std::vector<Vertex> xs;
  std::vector<Color> cs;
  std::vector<Tuple> vertex_tuples;
  std::vector<std::vector<Color>> color_tuples;
  std::function<void()> vrec = [&]() {
    if (static_cast<int>(xs.size()) == 2 * k - 2) {
      vertex_tuples.push_back(xs);
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (std::find(xs.begin(), xs.end(), v) != xs.end()) continue;
      xs.push_back(v);
      vrec();
      xs.pop_back();
    }
  };
  std::function<void()> crec = [&]() {
    if (static_cast<int>(cs.size()) == k - 1) {
      color_tuples.push_back(cs);
      return;
    }
    for (Color c = 1; c <= m; ++c) {
      if (std::find(cs.begin(), cs.end(), c) != cs.end()) continue;
      cs.push_back(c);
      crec();
      cs.pop_back();
    }
  };
  vrec();
  crec();
  auto in = [](const auto& xs_, auto v) { return std::find(xs_.begin(), xs_.end(), v) != xs_.end(); };
  std::uint64_t count = 0;
  const std::size_t h = static_cast<std::size_t>(k - 1);
  for (const auto& x : vertex_tuples) {
    if (vt && in(x, vt->x)) continue;
    if (et && std::any_of(x.begin(), x.end(), [&](Vertex v) { return in(et->u, v) || in(et->v, v); })) continue;
    for (const auto& c : color_tuples) {
      if (!plain_tight(s, x, c, false)) continue;
      if (vt) {
        if (in(c, vt->c)) continue;
        std::vector<Vertex> big(x.begin(), x.begin() + static_cast<long>(h));
        big.push_back(vt->x);
        big.insert(big.end(), x.begin() + static_cast<long>(h), x.end());
        std::vector<Color> pat{vt->c};
        pat.insert(pat.end(), c.begin(), c.end());
        if (plain_tight(s, big, pat, false)) ++count;
      } else {
        if (std::any_of(c.begin(), c.end(), [&](Color q) { return in(et->o, q); })) continue;
        std::vector<Vertex> left(x.begin(), x.begin() + static_cast<long>(h));
        left.insert(left.end(), et->u.begin(), et->u.end());
        std::vector<Vertex> right(et->v.begin(), et->v.end());
        right.insert(right.end(), x.begin() + static_cast<long>(h), x.end());
        if (plain_tight(s, left, c, false) && plain_tight(s, right, et->o, false)) ++count;
      }
    }
  }
  return count;
}

} // namespace rhc::testing
