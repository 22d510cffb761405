#include "rhc/connector.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace rhc {

namespace {

// Smallest integer r with r^p >= n.
int integer_root_ceil(int n, int p) {
  int r = 1;
  auto power = [p](long long x) {
    long long out = 1;
    for (int i = 0; i < p; ++i) out *= x;
    return out;
  };
  while (power(r) < n) ++r;
  return r;
}

int to_int(const BigInt& v) { return static_cast<int>(to_int64(v)); }

Tuple sorted(Tuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

void check_end(const HypergraphSystem& system, const Tuple& e, const char* name) {
  if (static_cast<int>(e.size()) != system.k() - 1)
    throw std::invalid_argument(std::string(name) + " must have k-1 vertices");
  for (Vertex v : e)
    if (!system.valid_vertex(v)) throw std::out_of_range(std::string(name) + " has a vertex out of range");
  auto s = sorted(e);
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument(std::string(name) + " repeats a vertex");
}

void check_connect_args(const HypergraphSystem& system, const Tuple& e1, const Tuple& e2,
                        const std::vector<Color>& colors, const std::vector<Vertex>& forbidden) {
  check_end(system, e1, "e1");
  check_end(system, e2, "e2");
  for (Vertex v : e1)
    if (std::find(e2.begin(), e2.end(), v) != e2.end()) throw std::invalid_argument("e1 and e2 must be disjoint");
  for (Vertex v : forbidden) {
    if (!system.valid_vertex(v)) throw std::out_of_range("forbidden vertex out of range");
    if (std::find(e1.begin(), e1.end(), v) != e1.end() || std::find(e2.begin(), e2.end(), v) != e2.end())
      throw std::invalid_argument("an end vertex is forbidden");
  }
  std::set<Color> seen;
  for (Color c : colors) {
    if (!system.valid_color(c)) throw std::out_of_range("budget colour out of range");
    if (!seen.insert(c).second) throw std::invalid_argument("budget repeats a colour");
  }
}

} // namespace

CascadeParams CascadeParams::defaults(int k, int n, const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  CascadeParams p;
  const Rational inv_sq = 1 / (gamma * gamma);
  p.color_budget = to_int(ceil(2 * k * inv_sq)) - (k - 1);
  p.witness_count = integer_root_ceil(n, 4);
  p.degree_floor = integer_root_ceil(n, 2);
  p.small_threshold = (n + 1) / 2;
  p.max_depth = k - 1 + to_int(ceil((k - 1) * inv_sq)) + k - 2;
  return p;
}

CascadeParams CascadeParams::desk(int k, int n, const Rational& gamma) {
  CascadeParams p = defaults(k, n, gamma);
  p.witness_count = 1;
  p.degree_floor = 1;
  p.small_threshold = 1;
  return p;
}

void CascadeParams::validate(int k) const {
  if (color_budget < 1 || witness_count < 1 || degree_floor < 1 || small_threshold < 1 || colors_per_level < 1)
    throw std::invalid_argument("cascade thresholds must be at least 1");
  if (max_depth < k - 1) throw std::invalid_argument("max_depth must be at least k-1");
}

Cascade::Cascade(const HypergraphSystem& system, Tuple e0, std::vector<Color> colors, CascadeParams params,
                 std::vector<Vertex> excluded)
    : system_(&system), k_(system.k()), e0_(std::move(e0)), colors_(std::move(colors)), params_(params) {
  if (k_ < 3) throw std::invalid_argument("cascades need k >= 3");
  params_.validate(k_);
  check_end(system, e0_, "cascade root");
  excluded_.assign(static_cast<std::size_t>(system.n()) + 1, 0);
  for (Vertex v : excluded) excluded_.at(static_cast<std::size_t>(v)) = 1;
  for (Vertex v : e0_) excluded_[static_cast<std::size_t>(v)] = 1;
  CascadeLevel root;
  root.nodes.push_back(Tuple(e0_.begin() + 1, e0_.end()));
  root.back.emplace_back();
  levels_.push_back(std::move(root));
}

std::vector<Color> Cascade::level_colors() const {
  std::vector<Color> out;
  for (std::size_t j = 1; j < levels_.size(); ++j)
    out.insert(out.end(), levels_[j].colors.begin(), levels_[j].colors.end());
  return out;
}

std::optional<int> Cascade::find_node(int j, const Tuple& node) const {
  const auto& nodes = level(j).nodes;
  auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
  if (it == nodes.end() || *it != node) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

int Cascade::backward_degree(int j, int node) const {
  return static_cast<int>(level(j).back.at(static_cast<std::size_t>(node)).size());
}

bool Cascade::grow() {
  const int j = depth() + 1;
  if (j > params_.max_depth) return false;
  const std::size_t pool = static_cast<std::size_t>(params_.colors_per_level);
  if (next_color_ + pool > colors_.size()) {
    budget_exhausted_ = true;
    return false;
  }
  CascadeLevel next;
  next.colors.assign(colors_.begin() + static_cast<std::ptrdiff_t>(next_color_),
                     colors_.begin() + static_cast<std::ptrdiff_t>(next_color_ + pool));
  next_color_ += pool;

  const CascadeLevel& prev = levels_.back();
  std::map<Tuple, int> node_ids;
  std::map<std::pair<int, int>, int> edge_ids;
  std::vector<Tuple> raw_nodes;
  std::vector<CascadeEdge> raw_edges;

  for (int g = 0; g < static_cast<int>(prev.nodes.size()); ++g) {
    const Tuple& gt = prev.nodes[static_cast<std::size_t>(g)];
    std::vector<std::pair<int, Vertex>> preds;
    if (j == 1) {
      preds.emplace_back(-1, e0_.front());
    } else {
      for (int e : prev.back[static_cast<std::size_t>(g)]) {
        const auto& pe = prev.edges[static_cast<std::size_t>(e)];
        preds.emplace_back(e, levels_[static_cast<std::size_t>(j - 2)].nodes[static_cast<std::size_t>(pe.from)].front());
      }
    }
    for (auto [w, prefix] : preds) {
      Tuple s = gt;
      s.push_back(prefix);
      for (Color c : next.colors) {
        for (Vertex u : system_->graph(c).neighbors(s)) {
          if (excluded_[static_cast<std::size_t>(u)]) continue;
          Tuple h(gt.begin() + 1, gt.end());
          h.push_back(u);
          auto [nit, fresh] = node_ids.try_emplace(h, static_cast<int>(raw_nodes.size()));
          if (fresh) raw_nodes.push_back(h);
          auto [eit, efresh] = edge_ids.try_emplace({g, nit->second}, static_cast<int>(raw_edges.size()));
          if (efresh) raw_edges.push_back({g, nit->second, {}});
          auto& ws = raw_edges[static_cast<std::size_t>(eit->second)].witnesses;
          if (ws.empty() || ws.back().first != w) ws.emplace_back(w, c);
        }
      }
    }
  }

  const int required = j >= k_ ? params_.witness_count : 1;
  std::vector<int> in_degree(raw_nodes.size(), 0);
  for (const auto& e : raw_edges)
    if (static_cast<int>(e.witnesses.size()) >= required) ++in_degree[static_cast<std::size_t>(e.to)];
  const int floor = j >= k_ - 1 ? params_.degree_floor : 1;

  // Survivors in lexicographic order.
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(raw_nodes.size()); ++i)
    if (in_degree[static_cast<std::size_t>(i)] >= floor) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return raw_nodes[static_cast<std::size_t>(a)] < raw_nodes[static_cast<std::size_t>(b)]; });
  std::vector<int> remap(raw_nodes.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    next.nodes.push_back(raw_nodes[static_cast<std::size_t>(order[i])]);
  }
  next.back.assign(next.nodes.size(), {});

  auto prefix_of = [&](int w) {
    if (w < 0) return e0_.front();
    return levels_[static_cast<std::size_t>(j - 2)].nodes[static_cast<std::size_t>(prev.edges[static_cast<std::size_t>(w)].from)].front();
  };
  for (auto& e : raw_edges) {
    if (static_cast<int>(e.witnesses.size()) < required) continue;
    const int to = remap[static_cast<std::size_t>(e.to)];
    if (to < 0) continue;
    std::sort(e.witnesses.begin(), e.witnesses.end(), [&](const auto& a, const auto& b) {
      return std::pair(prefix_of(a.first), a.first) < std::pair(prefix_of(b.first), b.first);
    });
    e.to = to;
    next.back[static_cast<std::size_t>(to)].push_back(static_cast<int>(next.edges.size()));
    next.edges.push_back(std::move(e));
  }

  if (next.nodes.empty() && empty_level_ == 0) empty_level_ = j;
  levels_.push_back(std::move(next));
  return true;
}

Cascade grow_cascade(const HypergraphSystem& system, const Tuple& e0, const std::vector<Color>& colors,
                     const CascadeParams& params, std::optional<int> depth, const std::vector<Vertex>& excluded) {
  Cascade c(system, e0, colors, params, excluded);
  const int target = depth.value_or(params.max_depth);
  while (c.depth() < target && c.empty_level() == 0 && c.grow()) {
  }
  return c;
}

namespace {

class Extractor {
 public:
  Extractor(const Cascade& c, std::vector<char>& used, std::uint64_t limit) : c_(c), used_(used), limit_(limit) {}

  bool run(int j, int edge) {
    if (++steps_ > limit_) {
      exhausted_ = true;
      return false;
    }
    const auto& e = c_.level(j).edges[static_cast<std::size_t>(edge)];
    for (auto [w, color] : e.witnesses) {
      Vertex p = w < 0 ? c_.root().front()
                       : c_.level(j - 2).nodes[static_cast<std::size_t>(c_.level(j - 1).edges[static_cast<std::size_t>(w)].from)].front();
      if (used_[static_cast<std::size_t>(p)]) continue;
      used_[static_cast<std::size_t>(p)] = 1;
      prefixes.push_back(p);
      colors.push_back(color);
      if (w < 0 || run(j - 1, w)) return true;
      used_[static_cast<std::size_t>(p)] = 0;
      prefixes.pop_back();
      colors.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<Vertex> prefixes;
  std::vector<Color> colors;
  bool exhausted_ = false;

 private:
  const Cascade& c_;
  std::vector<char>& used_;
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

} // namespace

ExtractResult extract_path(const Cascade& cascade, int j, int edge, const std::vector<Vertex>& avoid) {
  ExtractResult out;
  if (j < 1 || j > cascade.depth()) throw std::out_of_range("cascade level out of range");
  const auto& lvl = cascade.level(j);
  if (edge < 0 || edge >= static_cast<int>(lvl.edges.size())) throw std::out_of_range("cascade edge out of range");
  if (avoid.size() > cascade.params().avoid_cap) {
    out.failure = "avoid set exceeds the configured cap";
    return out;
  }
  const auto& e = lvl.edges[static_cast<std::size_t>(edge)];
  Tuple tail = cascade.level(j - 1).nodes[static_cast<std::size_t>(e.from)];
  tail.push_back(lvl.nodes[static_cast<std::size_t>(e.to)].back());

  Vertex top = *std::max_element(tail.begin(), tail.end());
  for (Vertex v : cascade.root()) top = std::max(top, v);
  for (Vertex v : avoid) top = std::max(top, v);
  std::vector<char> used(static_cast<std::size_t>(top) + 1, 0);
  for (Vertex v : avoid) used[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : tail) {
    if (used[static_cast<std::size_t>(v)]) {
      out.failure = "edge meets the avoid set";
      return out;
    }
    used[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex v : cascade.root())
    if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) {
      out.failure = "root meets the avoid set";
      return out;
    }

  Extractor ex(cascade, used, cascade.params().step_limit);
  if (!ex.run(j, edge)) {
    out.failure = ex.exhausted_ ? "extraction step limit reached" : "witnesses exhausted";
    return out;
  }
  TightWalk p;
  p.vertices.assign(ex.prefixes.rbegin(), ex.prefixes.rend());
  p.vertices.insert(p.vertices.end(), tail.begin(), tail.end());
  p.colors.assign(ex.colors.rbegin(), ex.colors.rend());
  out.path = std::move(p);
  return out;
}

ConnectResult connect(const HypergraphSystem& system, const Tuple& e1, const Tuple& e2,
                      const std::vector<Color>& colors, const CascadeParams& params,
                      const std::vector<Vertex>& forbidden) {
  check_connect_args(system, e1, e2, colors, forbidden);
  const int k = system.k();
  params.validate(k);
  ConnectResult out;
  if (k < 3) {
    out.failure = "cascade connector needs k >= 3";
    return out;
  }
  const std::size_t pool = static_cast<std::size_t>(params.colors_per_level);
  const std::size_t budget = std::min(colors.size(), static_cast<std::size_t>(params.color_budget));
  const std::size_t b_colors = static_cast<std::size_t>(k - 2) * pool;
  if (budget < b_colors + 1 + static_cast<std::size_t>(k - 1) * pool) {
    out.failure = "color budget insufficient";
    return out;
  }
  std::vector<Color> for_b(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(b_colors));
  const Color hook = colors[b_colors];
  std::vector<Color> for_a(colors.begin() + static_cast<std::ptrdiff_t>(b_colors) + 1,
                           colors.begin() + static_cast<std::ptrdiff_t>(budget));

  std::vector<Vertex> excl_a = forbidden, excl_b = forbidden;
  excl_a.insert(excl_a.end(), e2.begin(), e2.end());
  excl_b.insert(excl_b.end(), e1.begin(), e1.end());

  Cascade b = grow_cascade(system, e2, for_b, params, k - 2, excl_b);
  if (b.depth() < k - 2 || b.empty_level() != 0) {
    out.failure = "e2 cascade empty at level " + std::to_string(b.empty_level());
    return out;
  }
  const CascadeLevel& b_top = b.level(k - 2);

  Cascade a(system, e1, for_a, params, excl_a);
  while (a.grow()) {
    const int j = a.depth();
    const CascadeLevel& lvl = a.level(j);
    out.level_sizes.push_back(lvl.nodes.size());
    if (lvl.nodes.empty()) {
      out.failure = "e1 cascade empty at level " + std::to_string(j);
      return out;
    }
    if (j < k - 1) continue;
    for (int g = 0; g < static_cast<int>(lvl.nodes.size()); ++g) {
      if (a.backward_degree(j, g) < params.small_threshold) continue;
      const Tuple& gt = lvl.nodes[static_cast<std::size_t>(g)];
      Tuple rg(gt.rbegin(), gt.rend());
      auto bi = b.find_node(k - 2, rg);
      if (!bi) continue;
      for (int eid : lvl.back[static_cast<std::size_t>(g)]) {
        const auto& edge = lvl.edges[static_cast<std::size_t>(eid)];
        const Vertex v0 = a.level(j - 1).nodes[static_cast<std::size_t>(edge.from)].front();
        Tuple hook_set = gt;
        hook_set.push_back(v0);
        hook_set.push_back(e2.back());
        if (!system.has_edge(hook, sorted(hook_set))) continue;
        auto p1 = extract_path(a, j, eid, e2);
        if (!p1.path) continue;
        std::vector<Vertex> avoid_b;
        for (Vertex v : p1.path->vertices)
          if (std::find(gt.begin(), gt.end(), v) == gt.end()) avoid_b.push_back(v);
        for (int qe : b_top.back[static_cast<std::size_t>(*bi)]) {
          auto q = extract_path(b, k - 2, qe, avoid_b);
          if (!q.path) continue;
          TightWalk p = *p1.path;
          p.vertices.insert(p.vertices.end(), e2.rbegin(), e2.rend());
          p.colors.push_back(hook);
          auto rq = reverse(*q.path, k);
          p.colors.insert(p.colors.end(), rq.colors.begin(), rq.colors.end());
          if (!verify_walk(system, p).ok()) continue;
          out.path = std::move(p);
          out.meeting_level = j;
          return out;
        }
      }
    }
  }
  out.failure = a.budget_exhausted() ? "color budget exhausted before a meeting node"
                                     : "no meeting node within max_depth";
  return out;
}

std::optional<std::vector<Color>> match_windows(const std::vector<std::vector<Color>>& options) {
  std::map<Color, int> owner;
  std::vector<Color> assigned(options.size(), 0);
  std::vector<char> seen;
  std::map<Color, int> color_index;
  for (const auto& o : options)
    for (Color c : o) color_index.try_emplace(c, static_cast<int>(color_index.size()));
  std::vector<int> match_of_color(color_index.size(), -1);

  std::function<bool(int)> augment = [&](int w) {
    for (Color c : options[static_cast<std::size_t>(w)]) {
      int ci = color_index[c];
      if (seen[static_cast<std::size_t>(ci)]) continue;
      seen[static_cast<std::size_t>(ci)] = 1;
      int holder = match_of_color[static_cast<std::size_t>(ci)];
      if (holder < 0 || augment(holder)) {
        match_of_color[static_cast<std::size_t>(ci)] = w;
        assigned[static_cast<std::size_t>(w)] = c;
        return true;
      }
    }
    return false;
  };
  for (int w = 0; w < static_cast<int>(options.size()); ++w) {
    seen.assign(color_index.size(), 0);
    if (!augment(w)) return std::nullopt;
  }
  return assigned;
}

namespace {

class SequenceSearch {
 public:
  SequenceSearch(const HypergraphSystem& system, const Tuple& e1, const Tuple& e2, const std::vector<Color>& colors,
                 const std::vector<Vertex>& forbidden, std::uint64_t limit)
      : sys_(system), k_(system.k()), colors_(colors), limit_(limit),
        blocked_(static_cast<std::size_t>(system.n()) + 1, 0) {
    for (Vertex v : forbidden) blocked_[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : e1) blocked_[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : e2) blocked_[static_cast<std::size_t>(v)] = 1;
    head_ = e1;
    tail_.assign(e2.rbegin(), e2.rend());
  }

  std::optional<TightWalk> search(std::size_t len) {
    len_ = len;
    seq_ = head_;
    seq_.resize(len, 0);
    std::copy(tail_.begin(), tail_.end(), seq_.end() - static_cast<std::ptrdiff_t>(tail_.size()));
    options_.clear();
    return place(head_.size());
  }

  std::uint64_t steps = 0;
  bool exhausted = false;

 private:
  std::vector<Color> window_options(std::size_t start) const {
    Tuple w(seq_.begin() + static_cast<std::ptrdiff_t>(start), seq_.begin() + static_cast<std::ptrdiff_t>(start) + k_);
    std::sort(w.begin(), w.end());
    std::vector<Color> out;
    for (Color c : colors_)
      if (sys_.has_edge(c, w)) out.push_back(c);
    return out;
  }

  // Adds windows ending at positions [from, to]; false if one has no colour
  // or the windows so far admit no rainbow assignment.
  bool add_windows(std::size_t from, std::size_t to) {
    for (std::size_t end = from; end <= to; ++end) {
      if (end + 1 < static_cast<std::size_t>(k_)) continue;
      auto o = window_options(end + 1 - static_cast<std::size_t>(k_));
      if (o.empty()) return false;
      options_.push_back(std::move(o));
    }
    return match_windows(options_).has_value();
  }

  std::optional<TightWalk> place(std::size_t pos) {
    const std::size_t middle_end = len_ - tail_.size();
    if (pos == middle_end) {
      const std::size_t saved = options_.size();
      std::optional<TightWalk> found;
      if (add_windows(pos, len_ - 1)) {
        auto colors = match_windows(options_);
        found = TightWalk{seq_, *colors, false};
      }
      options_.resize(saved);
      return found;
    }
    // Candidates close the window ending at pos in some budget colour.
    std::set<Vertex> cands;
    Tuple s(seq_.begin() + static_cast<std::ptrdiff_t>(pos) - (k_ - 1), seq_.begin() + static_cast<std::ptrdiff_t>(pos));
    for (Color c : colors_)
      for (Vertex u : sys_.graph(c).neighbors(s)) cands.insert(u);
    for (Vertex u : cands) {
      if (blocked_[static_cast<std::size_t>(u)]) continue;
      if (++steps > limit_) {
        exhausted = true;
        return std::nullopt;
      }
      seq_[pos] = u;
      blocked_[static_cast<std::size_t>(u)] = 1;
      const std::size_t saved = options_.size();
      std::optional<TightWalk> found;
      if (add_windows(pos, pos)) found = place(pos + 1);
      options_.resize(saved);
      blocked_[static_cast<std::size_t>(u)] = 0;
      if (found || exhausted) return found;
    }
    return std::nullopt;
  }

  const HypergraphSystem& sys_;
  int k_;
  const std::vector<Color>& colors_;
  std::uint64_t limit_;
  std::vector<char> blocked_;
  Tuple head_, tail_, seq_;
  std::size_t len_ = 0;
  std::vector<std::vector<Color>> options_;
};

} // namespace

ConnectResult connect_bfs_fallback(const HypergraphSystem& system, const Tuple& e1, const Tuple& e2,
                                   const std::vector<Color>& colors, std::size_t max_len,
                                   const std::vector<Vertex>& forbidden, std::uint64_t step_limit) {
  check_connect_args(system, e1, e2, colors, forbidden);
  const std::size_t k = static_cast<std::size_t>(system.k());
  ConnectResult out;
  SequenceSearch search(system, e1, e2, colors, forbidden, step_limit);
  const std::size_t cap = std::min(max_len, static_cast<std::size_t>(system.n()));
  for (std::size_t len = 2 * (k - 1); len <= cap; ++len) {
    if (len - k + 1 > colors.size()) break;
    auto p = search.search(len);
    out.explored = search.steps;
    if (p) {
      out.path = std::move(p);
      return out;
    }
    if (search.exhausted) {
      out.failure = "search step limit reached";
      return out;
    }
  }
  out.failure = "no connecting path within the length and colour budget";
  return out;
}

} // namespace rhc
