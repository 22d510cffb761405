#include "rhc/path_cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rhc/random.hpp"

namespace rhc {

OneKGraph::OneKGraph(int k, int left, int right) : k_(k), right_(right) {
  if (left < 1) throw std::invalid_argument("a (1,k)-graph needs a left vertex");
  slices_.reserve(static_cast<std::size_t>(left));
  for (int i = 0; i < left; ++i) slices_.emplace_back(k, right);
}

OneKGraph::OneKGraph(std::vector<KGraph> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw std::invalid_argument("a (1,k)-graph needs a left vertex");
  k_ = slices_.front().k();
  right_ = slices_.front().n();
  for (const auto& s : slices_)
    if (s.k() != k_ || s.n() != right_) throw std::invalid_argument("slices disagree on k or the right side");
}

std::size_t OneKGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& s : slices_) total += s.edge_count();
  return total;
}

int OneKGraph::min_codegree() const {
  int best = right_;
  for (const auto& s : slices_) best = std::min(best, s.min_codegree());
  return best;
}

OneKGraph OneKGraph::induced(const std::vector<int>& left, const std::vector<int>& right) const {
  std::vector<int> to_new(static_cast<std::size_t>(right_) + 1, 0);
  for (std::size_t j = 0; j < right.size(); ++j) to_new.at(static_cast<std::size_t>(right[j])) = static_cast<int>(j) + 1;
  OneKGraph out(k_, static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<Tuple> mapped;
    for (const auto& e : slice(left[i]).edges()) {
      Tuple m;
      for (Vertex v : e) {
        if (!to_new[static_cast<std::size_t>(v)]) break;
        m.push_back(to_new[static_cast<std::size_t>(v)]);
      }
      if (m.size() != e.size()) continue;
      std::sort(m.begin(), m.end());
      mapped.push_back(std::move(m));
    }
    std::sort(mapped.begin(), mapped.end());
    for (const auto& e : mapped) out.slice(static_cast<int>(i) + 1).add_edge(e);
  }
  return out;
}

OneKGraph build_auxiliary(const HypergraphSystem& system) {
  std::vector<KGraph> slices;
  for (Color c = 1; c <= system.m(); ++c) slices.push_back(system.graph(c));
  return OneKGraph(std::move(slices));
}

ClusterGeometry random_geometry(int m, int n, int t, std::uint64_t seed) {
  if (t < 1 || m < t || n < t) throw std::invalid_argument("need 1 <= t <= min(m, n)");
  Rng rng(derive_seed(seed, 0x6e0));
  auto split = [&](int total, std::vector<int>& rest, std::vector<std::vector<int>>& clusters) {
    std::vector<int> ids(static_cast<std::size_t>(total));
    std::iota(ids.begin(), ids.end(), 1);
    shuffle(ids, rng);
    const std::size_t size = static_cast<std::size_t>(total / t);
    for (int i = 0; i < t; ++i) {
      std::vector<int> c(ids.begin() + static_cast<std::ptrdiff_t>(i * size), ids.begin() + static_cast<std::ptrdiff_t>((i + 1) * size));
      std::sort(c.begin(), c.end());
      clusters.push_back(std::move(c));
    }
    rest.assign(ids.begin() + static_cast<std::ptrdiff_t>(t * size), ids.end());
    std::sort(rest.begin(), rest.end());
  };
  ClusterGeometry g;
  split(m, g.v0_colors, g.color_clusters);
  split(n, g.v0_vertices, g.vertex_clusters);
  return g;
}

PartiteHypergraph cluster_host(const HypergraphSystem& system, const std::vector<Color>& colors,
                               const std::vector<std::vector<Vertex>>& vertex_parts) {
  const int k = system.k();
  if (static_cast<int>(vertex_parts.size()) != k) throw std::invalid_argument("need k vertex parts");
  std::vector<int> sizes{static_cast<int>(colors.size())};
  for (const auto& p : vertex_parts) sizes.push_back(static_cast<int>(p.size()));
  PartiteHypergraph h(sizes);
  h.labels.push_back(colors);
  for (const auto& p : vertex_parts) h.labels.push_back(p);
  for (int s : sizes)
    if (s == 0) return h;

  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  Tuple e(static_cast<std::size_t>(k));
  for (;;) {
    for (int j = 0; j < k; ++j)
      e[static_cast<std::size_t>(j)] = vertex_parts[static_cast<std::size_t>(j)][static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    for (std::size_t c = 0; c < colors.size(); ++c) {
      if (!system.has_edge(colors[c], e)) continue;
      std::vector<int> local{static_cast<int>(c)};
      local.insert(local.end(), idx.begin(), idx.end());
      h.add_edge(local);
    }
    int j = k - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == sizes[static_cast<std::size_t>(j) + 1]) idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return h;
}

namespace {

// All k-subsets of [1, t] in lexicographic order.
std::vector<std::vector<int>> subsets(int t, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  if (k > t) return out;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == t - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

} // namespace

ClusterPartition build_cluster_graph(const HypergraphSystem& system, const ClusterGeometry& geometry,
                                     const Rational& epsilon, const Rational& d, int trials, std::uint64_t seed) {
  const int k = system.k();
  const int t = static_cast<int>(geometry.vertex_clusters.size());
  if (t < k || static_cast<int>(geometry.color_clusters.size()) != t)
    throw std::invalid_argument("geometry needs t >= k clusters on each side");
  auto equal_sizes = [](const auto& clusters) {
    for (const auto& c : clusters)
      if (c.size() != clusters.front().size() || c.empty()) return false;
    return true;
  };
  if (!equal_sizes(geometry.color_clusters) || !equal_sizes(geometry.vertex_clusters))
    throw std::invalid_argument("geometry not equitable");

  ClusterPartition K;
  K.geometry = geometry;
  K.t = t;
  K.cluster_size = static_cast<int>(geometry.vertex_clusters.front().size());
  K.epsilon = epsilon;
  K.d = d;
  K.trials = trials;
  K.cluster_graph = OneKGraph(k, t, t);
  const auto tuples = subsets(t, k);
  for (int a = 1; a <= t; ++a) {
    for (std::size_t r = 0; r < tuples.size(); ++r) {
      std::vector<std::vector<Vertex>> parts;
      for (int b : tuples[r]) parts.push_back(geometry.vertex_clusters[static_cast<std::size_t>(b - 1)]);
      PartiteHypergraph host = cluster_host(system, geometry.color_clusters[static_cast<std::size_t>(a - 1)], parts);
      ClusterCandidate cand;
      cand.color_cluster = a;
      cand.vertex_clusters = tuples[r];
      cand.density = density(host);
      if (cand.density >= d && cand.density > 0) {
        auto verdict = estimate_regularity(host, epsilon, trials, derive_seed(seed, static_cast<std::uint64_t>(a), r));
        cand.worst_deviation = verdict.worst_deviation;
        cand.regular = !verdict.violation_found;
        cand.edge = cand.regular;
      }
      if (cand.edge) K.cluster_graph.add_edge(a, tuples[r]);
      K.candidates.push_back(std::move(cand));
    }
  }
  return K;
}

InheritanceReport check_inheritance(const ClusterPartition& K, const Rational& gamma) {
  const int k = K.cluster_graph.k();
  const int t = K.t;
  InheritanceReport r;
  r.degree_bound = (Rational(1, 2) + gamma / 4) * t;
  r.diagnostic_only = !(K.d == gamma / 6 && K.epsilon <= gamma * gamma / 16 && Rational(t) >= 3 * k / gamma);
  for (int a = 1; a <= t; ++a) {
    for (const auto& s : subsets(t, k - 1)) {
      ++r.subsets;
      const int deg = static_cast<int>(K.cluster_graph.slice(a).neighbors(s).size());
      if (Rational(deg) < r.degree_bound) ++r.violating_count;
    }
  }
  // count <= k sqrt(eps) t^k  <=>  count^2 <= k^2 eps t^{2k}
  Rational lhs = Rational(r.violating_count) * Rational(r.violating_count);
  r.pass = lhs <= Rational(k * k) * K.epsilon * pow(Rational(t), 2 * k);
  return r;
}

RandomPartition random_partition(const OneKGraph& f, int q, const Rational& gamma, std::uint64_t seed) {
  const int k = f.k();
  const int t = f.right();
  if (q < k || q % k != 0 || t % q != 0) throw std::invalid_argument("need k | Q and Q | t");
  if (f.left() * k != t) throw std::invalid_argument("need |left| = |right| / k");
  Rng rng(derive_seed(seed, 0x9a7));
  std::vector<int> left(static_cast<std::size_t>(f.left())), right(static_cast<std::size_t>(t));
  std::iota(left.begin(), left.end(), 1);
  std::iota(right.begin(), right.end(), 1);
  shuffle(left, rng);
  shuffle(right, rng);
  RandomPartition out;
  const std::size_t lq = static_cast<std::size_t>(q / k), rq = static_cast<std::size_t>(q);
  const Rational need = (Rational(1, 2) + gamma / 2) * (q - k + 1);
  int good = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(t / q); ++i) {
    PartitionClass c;
    c.left.assign(left.begin() + static_cast<std::ptrdiff_t>(i * lq), left.begin() + static_cast<std::ptrdiff_t>((i + 1) * lq));
    c.right.assign(right.begin() + static_cast<std::ptrdiff_t>(i * rq), right.begin() + static_cast<std::ptrdiff_t>((i + 1) * rq));
    std::sort(c.left.begin(), c.left.end());
    std::sort(c.right.begin(), c.right.end());
    c.min_codegree = f.induced(c.left, c.right).min_codegree();
    c.good = Rational(c.min_codegree) >= need;
    good += c.good;
    out.classes.push_back(std::move(c));
  }
  out.good_fraction = Rational(good, static_cast<int>(out.classes.size()));
  return out;
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const OneKGraph& f, std::uint64_t limit)
      : f_(f), limit_(limit), used_(static_cast<std::size_t>(f.right()) + 1, 0) {
    for (int i = 1; i <= f.left(); ++i) order_.push_back(i);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return f.slice(a).edge_count() < f.slice(b).edge_count(); });
  }

  bool run(std::size_t idx) {
    if (idx == order_.size()) return true;
    if (++steps_ > limit_) throw std::runtime_error("matching search step limit reached");
    const int i = order_[idx];
    for (const auto& e : f_.slice(i).edges()) {
      if (!free(e)) continue;
      for (Vertex v : e) used_[static_cast<std::size_t>(v)] = 1;
      chosen.push_back({i, e});
      if (forward_ok(idx + 1) && run(idx + 1)) return true;
      chosen.pop_back();
      for (Vertex v : e) used_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  std::vector<MatchingEdge> chosen;

 private:
  bool free(const Tuple& e) const {
    for (Vertex v : e)
      if (used_[static_cast<std::size_t>(v)]) return false;
    return true;
  }

  bool forward_ok(std::size_t from) const {
    for (std::size_t j = from; j < order_.size(); ++j) {
      const auto& edges = f_.slice(order_[j]).edges();
      if (std::none_of(edges.begin(), edges.end(), [&](const Tuple& e) { return free(e); })) return false;
    }
    return true;
  }

  const OneKGraph& f_;
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
  std::vector<char> used_;
  std::vector<int> order_;
};

} // namespace

std::optional<std::vector<MatchingEdge>> rainbow_perfect_matching(const OneKGraph& f, std::uint64_t step_limit) {
  if (f.right() % f.k() != 0 || f.left() * f.k() != f.right())
    throw std::invalid_argument("need |left| = |right| / k");
  MatchingSearch s(f, step_limit);
  if (!s.run(0)) return std::nullopt;
  std::sort(s.chosen.begin(), s.chosen.end(), [](const auto& a, const auto& b) { return a.left < b.left; });
  return s.chosen;
}

EmbedReport embed_path_cover(const HypergraphSystem& system, const EmbedParams& params, std::uint64_t seed) {
  const int k = system.k(), n = system.n(), m = system.m();
  const int t = params.t0;
  if (t % k != 0 || params.q % k != 0 || t % params.q != 0 || params.q < k)
    throw std::invalid_argument("need k | t0, k | Q and Q | t0");
  if (params.epsilon <= 0 || params.gamma <= 0) throw std::invalid_argument("epsilon and gamma must be positive");
  const Rational d = params.d.value_or(params.gamma / 6);
  EmbedReport r;
  if (params.gamma / 6 > params.epsilon)
    r.big_l = ceil(Rational(3 * k * t) / (params.epsilon * (params.gamma / 6 - params.epsilon)));

  const ClusterGeometry geometry = random_geometry(m, n, t, derive_seed(seed, 1));
  const ClusterPartition K = build_cluster_graph(system, geometry, params.epsilon, d, params.trials, derive_seed(seed, 2));
  r.cluster_edges = K.edge_count();
  std::vector<std::vector<Vertex>> wstar = geometry.vertex_clusters;
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);

  if (K.edge_count() == 0) {
    r.stage_failure = "cluster graph has no edges";
  } else {
    const int per_round = t / k;
    std::vector<int> all_right(static_cast<std::size_t>(t));
    std::iota(all_right.begin(), all_right.end(), 1);
    for (int round = 1; round <= k; ++round) {
      std::vector<int> lefts;
      for (int a = (round - 1) * per_round + 1; a <= round * per_round; ++a) lefts.push_back(a);
      const OneKGraph fi = K.cluster_graph.induced(lefts, all_right);
      const RandomPartition part = random_partition(fi, params.q, params.gamma, derive_seed(seed, 3, static_cast<std::uint64_t>(round)));
      r.good_fractions.push_back(part.good_fraction);
      std::vector<Vertex> used_this_round;
      for (const auto& cls : part.classes) {
        if (!cls.good) continue;
        std::optional<std::vector<MatchingEdge>> match;
        try {
          match = rainbow_perfect_matching(fi.induced(cls.left, cls.right));
        } catch (const std::runtime_error&) {
          continue;
        }
        if (!match) continue;
        for (const auto& me : *match) {
          const int a = lefts[static_cast<std::size_t>(cls.left[static_cast<std::size_t>(me.left - 1)] - 1)];
          std::vector<std::vector<Vertex>> parts;
          for (Vertex rv : me.right) parts.push_back(wstar[static_cast<std::size_t>(cls.right[static_cast<std::size_t>(rv - 1)] - 1)]);
          if (std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) continue;
          PartiteHypergraph host = cluster_host(system, geometry.color_clusters[static_cast<std::size_t>(a - 1)], parts);
          CoverReport cover = cover_family(host, d, params.epsilon);
          for (const auto& p : cover.paths) {
            TightWalk w = zero_k_to_rainbow(p, host);
            for (Vertex v : w.vertices) {
              covered[static_cast<std::size_t>(v)] = 1;
              used_this_round.push_back(v);
            }
            r.family.paths.push_back(std::move(w));
          }
        }
      }
      for (auto& cluster : wstar)
        std::erase_if(cluster, [&](Vertex v) { return covered[static_cast<std::size_t>(v)] != 0; });
    }
    if (r.family.paths.empty()) r.stage_failure = "no paths embedded";
  }

  for (Vertex v = 1; v <= n; ++v)
    if (!covered[static_cast<std::size_t>(v)]) r.family.uncovered.push_back(v);
  r.uncovered = r.family.uncovered.size();
  r.v0_vertices = geometry.v0_vertices.size();
  std::size_t left_total = 0;
  for (const auto& c : wstar) {
    r.leftover.push_back(c.size());
    left_total += c.size();
  }
  r.accounting_ok = r.uncovered == r.v0_vertices + left_total;
  r.within_delta = Rational(static_cast<long long>(r.uncovered)) <= params.delta * n;
  return r;
}

RainbowFamily greedy_path_cover(const HypergraphSystem& system, const Rational& delta, std::size_t min_len,
                                std::uint64_t seed, const GreedyCoverOptions& options) {
  const int k = system.k(), n = system.n(), m = system.m();
  std::vector<char> free_v(static_cast<std::size_t>(n) + 1, 0), free_c(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Vertex> pool_v;
  if (options.vertices) pool_v = *options.vertices;
  else for (Vertex v = 1; v <= n; ++v) pool_v.push_back(v);
  std::vector<Color> pool_c;
  if (options.colors) pool_c = *options.colors;
  else for (Color c = 1; c <= m; ++c) pool_c.push_back(c);
  for (Vertex v : pool_v) free_v.at(static_cast<std::size_t>(v)) = 1;
  for (Color c : pool_c) free_c.at(static_cast<std::size_t>(c)) = 1;

  Rng rng(derive_seed(seed, 0x9c0));
  RainbowFamily out;
  std::size_t uncovered = pool_v.size();
  const Rational target = delta * static_cast<long long>(pool_v.size());
  const std::size_t stall = options.stall_limit ? options.stall_limit : static_cast<std::size_t>(4 * n);
  std::size_t misses = 0;

  auto extend = [&](TightWalk& w) {
    for (;;) {
      Tuple s(w.vertices.end() - (k - 1), w.vertices.end());
      std::vector<std::pair<Vertex, Color>> cands;
      for (Color c = 1; c <= m; ++c) {
        if (!free_c[static_cast<std::size_t>(c)]) continue;
        for (Vertex u : system.graph(c).neighbors(s))
          if (free_v[static_cast<std::size_t>(u)]) cands.emplace_back(u, c);
      }
      if (cands.empty()) return;
      auto [u, c] = cands[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(cands.size()) - 1))];
      w.vertices.push_back(u);
      w.colors.push_back(c);
      free_v[static_cast<std::size_t>(u)] = 0;
      free_c[static_cast<std::size_t>(c)] = 0;
    }
  };

  while (Rational(static_cast<long long>(uncovered)) > target && misses < stall) {
    std::vector<Color> order;
    for (Color c : pool_c)
      if (free_c[static_cast<std::size_t>(c)]) order.push_back(c);
    shuffle(order, rng);
    std::optional<TightWalk> start;
    for (Color c : order) {
      std::vector<const Tuple*> usable;
      for (const auto& e : system.graph(c).edges())
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return free_v[static_cast<std::size_t>(v)] != 0; }))
          usable.push_back(&e);
      if (usable.empty()) continue;
      Tuple e = *usable[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(usable.size()) - 1))];
      shuffle(e, rng);
      start = TightWalk{e, {c}, false};
      break;
    }
    if (!start) break;
    TightWalk w = *start;
    for (Vertex v : w.vertices) free_v[static_cast<std::size_t>(v)] = 0;
    free_c[static_cast<std::size_t>(w.colors.front())] = 0;
    extend(w);
    w = reverse(w, k);
    extend(w);
    if (w.vertices.size() >= min_len) {
      uncovered -= w.vertices.size();
      out.paths.push_back(std::move(w));
      misses = 0;
    } else {
      for (Vertex v : w.vertices) free_v[static_cast<std::size_t>(v)] = 1;
      for (Color c : w.colors) free_c[static_cast<std::size_t>(c)] = 1;
      ++misses;
    }
  }
  for (Vertex v : pool_v)
    if (free_v[static_cast<std::size_t>(v)]) out.uncovered.push_back(v);
  std::sort(out.uncovered.begin(), out.uncovered.end());
  return out;
}

} // namespace rhc
