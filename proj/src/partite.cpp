#include "rhc/partite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rhc/random.hpp"

namespace rhc {

PartiteHypergraph::PartiteHypergraph(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
  if (sizes_.size() < 2) throw std::invalid_argument("a partite hypergraph needs at least two parts");
  for (int s : sizes_)
    if (s < 0) throw std::invalid_argument("negative part size");
}

int PartiteHypergraph::max_part_size() const { return sizes_.empty() ? 0 : *std::max_element(sizes_.begin(), sizes_.end()); }

bool PartiteHypergraph::add_edge(const std::vector<int>& e) {
  if (e.size() != sizes_.size()) throw std::invalid_argument("edge must have one vertex per part");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= sizes_[i]) throw std::out_of_range("edge vertex outside its part");
  return edges_.insert(e).second;
}

int PartiteHypergraph::label(int part, int v) const {
  if (labels.empty()) return v;
  return labels.at(static_cast<std::size_t>(part)).at(static_cast<std::size_t>(v));
}

Rational density(const PartiteHypergraph& g, const std::vector<std::vector<int>>& subsets) {
  if (static_cast<int>(subsets.size()) != g.parts()) throw std::invalid_argument("need one subset per part");
  std::vector<std::vector<char>> in(subsets.size());
  BigInt denom = 1;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i].empty()) throw std::invalid_argument("density over an empty part");
    in[i].assign(static_cast<std::size_t>(g.part_size(static_cast<int>(i))), 0);
    for (int v : subsets[i]) in[i].at(static_cast<std::size_t>(v)) = 1;
    denom *= static_cast<long long>(subsets[i].size());
  }
  long long count = 0;
  for (const auto& e : g.edges()) {
    bool inside = true;
    for (std::size_t i = 0; i < e.size() && inside; ++i) inside = in[i][static_cast<std::size_t>(e[i])];
    count += inside;
  }
  return Rational(count) / Rational(denom);
}

Rational density(const PartiteHypergraph& g) {
  std::vector<std::vector<int>> all;
  for (int s : g.part_sizes()) {
    std::vector<int> v(static_cast<std::size_t>(s));
    std::iota(v.begin(), v.end(), 0);
    all.push_back(std::move(v));
  }
  return density(g, all);
}

Rational density(const KGraph& g, const std::vector<std::vector<Vertex>>& parts) {
  if (static_cast<int>(parts.size()) != g.k()) throw std::invalid_argument("need k parts");
  std::vector<int> owner(static_cast<std::size_t>(g.n()) + 1, -1);
  BigInt denom = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("density over an empty part");
    for (Vertex v : parts[i]) {
      if (v < 1 || v > g.n()) throw std::out_of_range("part vertex out of range");
      if (owner[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("parts must be disjoint");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    denom *= static_cast<long long>(parts[i].size());
  }
  long long count = 0;
  std::vector<char> hit(parts.size());
  for (const auto& e : g.edges()) {
    std::fill(hit.begin(), hit.end(), 0);
    bool ok = true;
    for (Vertex v : e) {
      int o = owner[static_cast<std::size_t>(v)];
      if (o < 0 || hit[static_cast<std::size_t>(o)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(o)] = 1;
    }
    count += ok;
  }
  return Rational(count) / Rational(denom);
}

RegularityVerdict estimate_regularity(const PartiteHypergraph& g, const Rational& epsilon, int trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  std::vector<int> lo;
  for (int s : g.part_sizes()) {
    BigInt need = ceil(epsilon * s);
    if (need > s || s == 0) throw std::invalid_argument("epsilon |V_i| exceeds |V_i|");
    lo.push_back(std::max(1, static_cast<int>(to_int64(need))));
  }
  const Rational full = density(g);
  RegularityVerdict out;
  out.trials = trials;
  Rng rng(derive_seed(seed, 0x7e6));
  std::vector<std::vector<int>> subsets(lo.size());
  for (int t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const int s = g.part_size(static_cast<int>(i));
      std::vector<int> ids(static_cast<std::size_t>(s));
      std::iota(ids.begin(), ids.end(), 0);
      shuffle(ids, rng);
      ids.resize(static_cast<std::size_t>(uniform_int(rng, lo[i], s)));
      std::sort(ids.begin(), ids.end());
      subsets[i] = std::move(ids);
    }
    Rational dev = abs(density(g, subsets) - full);
    if (dev > out.worst_deviation) out.worst_deviation = dev;
    if (dev > epsilon && !out.violation_found) {
      out.violation_found = true;
      out.witness = subsets;
    }
  }
  return out;
}

bool valid_zero_k_path(const PartiteHypergraph& g, const ZeroKPath& p) {
  const int k = g.parts() - 1;
  const std::size_t t = p.color_vertices.size();
  if (t < 1 || p.vertices.size() != t + static_cast<std::size_t>(k) - 1 || p.parts.size() != p.vertices.size())
    return false;
  std::set<int> colors(p.color_vertices.begin(), p.color_vertices.end());
  if (colors.size() != t) return false;
  std::set<std::pair<int, int>> seen;
  for (std::size_t j = 0; j < p.vertices.size(); ++j) {
    if (p.parts[j] < 1 || p.parts[j] > k) return false;
    if (!seen.insert({p.parts[j], p.vertices[j]}).second) return false;
  }
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<int> e(static_cast<std::size_t>(k) + 1, -1);
    e[0] = p.color_vertices[i];
    for (std::size_t j = i; j < i + static_cast<std::size_t>(k); ++j) {
      auto& slot = e[static_cast<std::size_t>(p.parts[j])];
      if (slot >= 0) return false;
      slot = p.vertices[j];
    }
    if (!g.contains(e)) return false;
  }
  return true;
}

namespace {

// Legal (k-1)-subset: the edge with part 0 and one further part blanked.
std::vector<int> legal_key(const std::vector<int>& e, std::size_t dropped) {
  std::vector<int> key = e;
  key[0] = -1;
  key[dropped] = -1;
  return key;
}

} // namespace

ZeroKPath extract_zero_k_path(const PartiteHypergraph& g, const Rational& c) {
  const int k = g.parts() - 1;
  if (k < 2) throw std::invalid_argument("need parts V_0..V_k with k >= 2");
  const int m = g.max_part_size();
  if (c <= 0) throw std::invalid_argument("c must be positive");
  if (Rational(static_cast<long long>(g.edge_count())) < c * pow(Rational(m), k + 1))
    throw std::invalid_argument("precondition |E| >= c m^{k+1} violated");

  std::vector<std::vector<int>> edges(g.edges().begin(), g.edges().end());
  std::map<std::vector<int>, std::vector<int>> through;
  for (int id = 0; id < static_cast<int>(edges.size()); ++id)
    for (std::size_t d = 1; d <= static_cast<std::size_t>(k); ++d)
      through[legal_key(edges[static_cast<std::size_t>(id)], d)].push_back(id);

  std::vector<char> alive(edges.size(), 1);
  std::map<std::vector<int>, int> degree;
  for (const auto& [key, ids] : through) degree[key] = static_cast<int>(ids.size());
  const Rational bound = c * m * m;
  auto low = [&](int d) { return d > 0 && Rational(d * k) < bound; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [key, ids] : through) {
      if (!low(degree[key])) continue;
      for (int id : ids) {
        if (!alive[static_cast<std::size_t>(id)]) continue;
        alive[static_cast<std::size_t>(id)] = 0;
        for (std::size_t d = 1; d <= static_cast<std::size_t>(k); ++d) --degree[legal_key(edges[static_cast<std::size_t>(id)], d)];
      }
      changed = true;
    }
  }
  auto first = std::find(alive.begin(), alive.end(), 1);
  if (first == alive.end()) throw std::invalid_argument("every edge was pruned; c is too large for this graph");

  const auto& e0 = edges[static_cast<std::size_t>(first - alive.begin())];
  ZeroKPath p;
  p.color_vertices.push_back(e0[0]);
  for (int i = 1; i <= k; ++i) {
    p.vertices.push_back(e0[static_cast<std::size_t>(i)]);
    p.parts.push_back(i);
  }
  std::set<int> used_colors{e0[0]};
  std::set<std::pair<int, int>> used;
  for (int i = 1; i <= k; ++i) used.insert({i, e0[static_cast<std::size_t>(i)]});

  auto extend = [&] {
    for (;;) {
      const std::size_t s = p.vertices.size();
      std::vector<int> key(static_cast<std::size_t>(k) + 1, -1);
      std::vector<char> present(static_cast<std::size_t>(k) + 1, 0);
      for (std::size_t j = s - static_cast<std::size_t>(k) + 1; j < s; ++j) {
        key[static_cast<std::size_t>(p.parts[j])] = p.vertices[j];
        present[static_cast<std::size_t>(p.parts[j])] = 1;
      }
      int missing = 1;
      while (present[static_cast<std::size_t>(missing)]) ++missing;
      auto it = through.find(key);
      if (it == through.end()) return;
      bool grew = false;
      for (int id : it->second) {
        if (!alive[static_cast<std::size_t>(id)]) continue;
        const auto& e = edges[static_cast<std::size_t>(id)];
        const int v = e[static_cast<std::size_t>(missing)];
        if (used_colors.count(e[0]) || used.count({missing, v})) continue;
        p.color_vertices.push_back(e[0]);
        p.vertices.push_back(v);
        p.parts.push_back(missing);
        used_colors.insert(e[0]);
        used.insert({missing, v});
        grew = true;
        break;
      }
      if (!grew) return;
    }
  };
  extend();
  std::reverse(p.color_vertices.begin(), p.color_vertices.end());
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.parts.begin(), p.parts.end());
  extend();

  // The bound counts colour vertices too: a (0,k-1)-path of length t has
  // 2t+k-1 vertices.
  const std::size_t all = p.color_vertices.size() + p.vertices.size();
  if (Rational(static_cast<long long>(all)) < c * m / k) throw std::logic_error("extracted path below c m / k vertices");
  return p;
}

CoverReport cover_family(const PartiteHypergraph& g, const Rational& alpha, const Rational& epsilon) {
  const int k = g.parts() - 1;
  const int m = g.part_size(0);
  CoverReport out;
  BigInt target = ceil((1 - 2 * k * epsilon) * m);
  out.target_colors = std::max(0, static_cast<int>(to_int64(target)));
  const Rational good = epsilon * (alpha - epsilon) * m / k;
  const int mm = g.max_part_size();

  std::vector<std::vector<char>> used;
  for (int s : g.part_sizes()) used.emplace_back(static_cast<std::size_t>(s), 0);

  for (;;) {
    if (out.covered_colors >= out.target_colors) {
      out.stop_reason = "coverage target reached";
      break;
    }
    PartiteHypergraph rest(g.part_sizes());
    rest.labels = g.labels;
    for (const auto& e : g.edges()) {
      bool free = true;
      for (std::size_t i = 0; i < e.size() && free; ++i) free = !used[i][static_cast<std::size_t>(e[i])];
      if (free) rest.add_edge(e);
    }
    if (rest.edge_count() == 0) {
      out.stop_reason = "remainder has no edges";
      break;
    }
    const Rational c = Rational(static_cast<long long>(rest.edge_count())) / pow(Rational(mm), k + 1);
    ZeroKPath p = extract_zero_k_path(rest, c);
    if (Rational(static_cast<long long>(p.vertex_count())) < good) {
      out.stop_reason = "path below the good-length threshold";
      break;
    }
    for (int cv : p.color_vertices) used[0][static_cast<std::size_t>(cv)] = 1;
    for (std::size_t j = 0; j < p.vertices.size(); ++j)
      used[static_cast<std::size_t>(p.parts[j])][static_cast<std::size_t>(p.vertices[j])] = 1;
    out.covered_colors += static_cast<int>(p.length());
    out.paths.push_back(std::move(p));
  }
  return out;
}

TightWalk zero_k_to_rainbow(const ZeroKPath& p, const PartiteHypergraph& g) {
  if (!valid_zero_k_path(g, p)) throw std::invalid_argument("not a (0,k-1)-path of this graph");
  TightWalk w;
  for (std::size_t j = 0; j < p.vertices.size(); ++j) w.vertices.push_back(g.label(p.parts[j], p.vertices[j]));
  for (int c : p.color_vertices) w.colors.push_back(g.label(0, c));
  return w;
}

ZeroKPath rainbow_to_zero_k(const TightWalk& walk, int k) {
  if (walk.is_cycle) throw std::invalid_argument("only paths map to (0,k-1)-paths");
  validate_structure(walk, k);
  if (walk.colors.empty()) throw std::invalid_argument("a (0,k-1)-path needs at least one edge");
  ZeroKPath p;
  p.color_vertices = walk.colors;
  p.vertices = walk.vertices;
  for (std::size_t j = 0; j < walk.vertices.size(); ++j) p.parts.push_back(static_cast<int>(j % static_cast<std::size_t>(k)) + 1);
  return p;
}

} // namespace rhc
