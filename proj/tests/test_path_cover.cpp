#include <doctest.h>

#include <set>

#include "rhc/generate.hpp"
#include "rhc/partite.hpp"
#include "rhc/path_cover.hpp"
#include "rhc/random.hpp"
#include "support.hpp"

using namespace rhc;

namespace {

PartiteHypergraph complete_partite(int parts, int size) {
  PartiteHypergraph g(std::vector<int>(static_cast<std::size_t>(parts), size));
  std::vector<int> e(static_cast<std::size_t>(parts), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == parts) {
      g.add_edge(e);
      return;
    }
    for (int v = 0; v < size; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return g;
}

PartiteHypergraph random_partite(int parts, int size, double p, std::uint64_t seed) {
  PartiteHypergraph g(std::vector<int>(static_cast<std::size_t>(parts), size));
  Rng rng(seed);
  std::vector<int> e(static_cast<std::size_t>(parts), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == parts) {
      if (uniform01(rng) < p) g.add_edge(e);
      return;
    }
    for (int v = 0; v < size; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return g;
}

int recount_one_k_min(const HypergraphSystem& s) {
  int best = -1;
  for (Color c = 1; c <= s.m(); ++c)
    for (int a = 1; a <= s.n(); ++a)
      for (int b = a + 1; b <= s.n(); ++b) {
        int d = 0;
        for (int v = 1; v <= s.n(); ++v)
          if (v != a && v != b && s.has_edge(c, Tuple{a, b, v})) ++d;
        if (best < 0 || d < best) best = d;
      }
  return best;
}

} // namespace

TEST_CASE("auxiliary graph is a bijection on edges") {
  HypergraphSystem s(3, 6, 2);
  s.graph(1).add_edge(Tuple{1, 2, 3});
  s.graph(1).add_edge(Tuple{2, 3, 4});
  s.graph(2).add_edge(Tuple{1, 2, 3});
  CHECK(build_auxiliary(s).edge_count() == 3);
  CHECK(build_auxiliary(testing::complete_system(3, 6, 6)).edge_count() == 120);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenParams g;
    g.kind = GenKind::Random;
    g.n = 7;
    g.p = Rational(8, 10);
    g.seed = seed;
    HypergraphSystem r = generate(g);
    OneKGraph h = build_auxiliary(r);
    CHECK(h.edge_count() == r.total_edges());
    CHECK(h.min_codegree() == recount_one_k_min(r));
    CHECK(h.min_codegree() == degree_report(r).global_min);
  }
}

TEST_CASE("partite density") {
  CHECK(density(complete_partite(3, 3)) == 1);
  CHECK(density(PartiteHypergraph({2, 2, 2})) == 0);
  PartiteHypergraph g({2, 2, 2});
  g.add_edge({0, 0, 0});
  g.add_edge({0, 0, 1});
  g.add_edge({0, 1, 0});
  g.add_edge({1, 1, 1});
  g.add_edge({1, 0, 1});
  CHECK(density(g) == Rational(5, 8));
  CHECK(density(g, {{0}, {0, 1}, {0, 1}}) == Rational(3, 4));
  CHECK_THROWS(density(g, {{}, {0}, {0}}));
}

TEST_CASE("k-graph crossing density") {
  KGraph g(3, 6, {{1, 3, 5}, {2, 4, 6}, {1, 2, 3}});
  CHECK(density(g, {{1, 2}, {3, 4}, {5, 6}}) == Rational(2, 8));
}

TEST_CASE("regularity sampling") {
  CHECK_FALSE(estimate_regularity(complete_partite(3, 6), Rational(1, 10), 200, 1).violation_found);
  // two complete blocks: vertices 0..4 with 0..4, 5..9 with 5..9
  PartiteHypergraph halves({10, 10, 10});
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b)
      for (int c = 0; c < 10; ++c)
        if (a / 5 == b / 5 && b / 5 == c / 5) halves.add_edge({a, b, c});
  RegularityVerdict v = estimate_regularity(halves, Rational(1, 10), 200, 2);
  CHECK(v.violation_found);
  CHECK(v.label() == "irregular");
  CHECK(v.worst_deviation > Rational(1, 10));
  int clean = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    if (!estimate_regularity(random_partite(3, 12, 0.5, seed), Rational(3, 10), 1000, seed).violation_found) ++clean;
  CHECK(clean >= 95);
}

TEST_CASE("zero-k path on the complete host") {
  ZeroKPath p = extract_zero_k_path(complete_partite(4, 5), Rational(1));
  CHECK(p.length() == 5);
  CHECK(p.vertex_count() == 7);
  CHECK(valid_zero_k_path(complete_partite(4, 5), p));
}

TEST_CASE("zero-k path length bound on random hosts") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    PartiteHypergraph g = random_partite(4, 8, 0.5 + 0.4 * static_cast<double>(seed % 5) / 5, seed);
    Rational c = density(g);
    if (c < Rational(1, 2)) continue;
    ZeroKPath p = extract_zero_k_path(g, c);
    CHECK(valid_zero_k_path(g, p));
    CHECK(Rational(static_cast<long long>(p.vertex_count())) >= c * 8 / 3);
  }
}

TEST_CASE("zero-k path precondition") {
  PartiteHypergraph g({3, 3, 3, 3});
  g.add_edge({0, 0, 0, 0});
  CHECK_THROWS_AS(extract_zero_k_path(g, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("cover family") {
  PartiteHypergraph full = complete_partite(4, 6);
  CoverReport r = cover_family(full, Rational(1), Rational(1, 20));
  REQUIRE(r.paths.size() == 1);
  CHECK(r.covered_colors == 6);
  CoverReport none = cover_family(PartiteHypergraph({6, 6, 6, 6}), Rational(1, 2), Rational(1, 20));
  CHECK(none.paths.empty());
  CHECK(none.covered_colors == 0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PartiteHypergraph g = random_partite(4, 10, 0.6, seed);
    const Rational alpha = density(g);
    const Rational eps = alpha / 2;
    CoverReport c = cover_family(g, alpha, eps);
    std::set<std::pair<int, int>> seen;
    std::set<int> colors;
    for (const auto& p : c.paths) {
      CHECK(valid_zero_k_path(g, p));
      CHECK(Rational(static_cast<long long>(p.vertex_count())) >= eps * (alpha - eps) * 10 / 3);
      for (std::size_t j = 0; j < p.vertices.size(); ++j) CHECK(seen.insert({p.parts[j], p.vertices[j]}).second);
      for (int col : p.color_vertices) CHECK(colors.insert(col).second);
    }
  }
}

TEST_CASE("zero-k paths and rainbow paths correspond") {
  // the third drawing: t = 4 edges on 6 vertices, k = 3
  HypergraphSystem s = testing::complete_system(3, 6, 4);
  TightWalk w{{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4}, false};
  ZeroKPath p = rainbow_to_zero_k(w, 3);
  CHECK(p.length() == 4);
  CHECK(p.vertex_count() == 6);
  CHECK(p.parts == std::vector<int>{1, 2, 3, 1, 2, 3});
  PartiteHypergraph host({7, 7, 7, 7});
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<int> e(4);
    e[0] = w.colors[i];
    for (std::size_t j = 0; j < 3; ++j) e[static_cast<std::size_t>(p.parts[i + j])] = w.vertices[i + j];
    host.add_edge(e);
  }
  TightWalk back = zero_k_to_rainbow(p, host);
  CHECK(back == w);
  CHECK(verify_walk(s, back).ok());
  TightWalk single{{3, 1, 2}, {2}, false};
  CHECK(rainbow_to_zero_k(single, 3).length() == 1);
}

TEST_CASE("cluster graph on complete and empty systems") {
  HypergraphSystem s = testing::complete_system(3, 12, 12);
  ClusterGeometry geo = random_geometry(12, 12, 6, 5);
  ClusterPartition k = build_cluster_graph(s, geo, Rational(1, 1000), Rational(1, 2), 20, 1);
  CHECK(k.edge_count() == 6 * 20);  // t colour clusters times C(6,3) vertex triples
  InheritanceReport inh = check_inheritance(k, Rational(1, 10));
  CHECK(inh.violating_count == 0);
  HypergraphSystem empty(3, 12, 12);
  ClusterPartition z = build_cluster_graph(empty, geo, Rational(1, 1000), Rational(1, 2), 20, 1);
  CHECK(z.edge_count() == 0);
  InheritanceReport zi = check_inheritance(z, Rational(1, 10));
  CHECK(zi.violating_count == zi.subsets);
  CHECK_FALSE(zi.pass);
}

TEST_CASE("planted cluster tuples are recovered") {
  const int t = 4, size = 4, n = t * size;
  ClusterGeometry geo;
  for (int i = 0; i < t; ++i) {
    std::vector<int> ids;
    for (int j = 1; j <= size; ++j) ids.push_back(i * size + j);
    geo.color_clusters.push_back(ids);
    geo.vertex_clusters.push_back(ids);
  }
  // colour cluster 1 with vertex clusters {1,2,3}, colour cluster 3 with {2,3,4}
  std::set<std::pair<int, std::vector<int>>> planted{{1, {1, 2, 3}}, {3, {2, 3, 4}}};
  HypergraphSystem s(3, n, n);
  Rng rng(8);
  for (const auto& [ci, vc] : planted)
    for (Color c : geo.color_clusters[static_cast<std::size_t>(ci - 1)])
      for (Vertex a : geo.vertex_clusters[static_cast<std::size_t>(vc[0] - 1)])
        for (Vertex b : geo.vertex_clusters[static_cast<std::size_t>(vc[1] - 1)])
          for (Vertex d : geo.vertex_clusters[static_cast<std::size_t>(vc[2] - 1)])
            if (uniform01(rng) < 0.9) s.graph(c).add_edge(Tuple{a, b, d});
  ClusterPartition k = build_cluster_graph(s, geo, Rational(1, 2), Rational(1, 2), 20, 3);
  std::set<std::pair<int, std::vector<int>>> found;
  for (const auto& cand : k.candidates)
    if (cand.edge) found.insert({cand.color_cluster, cand.vertex_clusters});
  CHECK(found == planted);
}

TEST_CASE("random partition classes") {
  OneKGraph full = build_auxiliary(testing::complete_system(3, 12, 4));
  RandomPartition all = random_partition(full, 6, Rational(1, 10), 1);
  CHECK(all.classes.size() == 2);
  CHECK(all.good_fraction == 1);
  OneKGraph empty(3, 4, 12);
  CHECK(random_partition(empty, 6, Rational(1, 10), 1).good_fraction == 0);
  CHECK_THROWS(random_partition(full, 5, Rational(1, 10), 1));
}

TEST_CASE("perfect matchings") {
  OneKGraph full = build_auxiliary(testing::complete_system(3, 9, 3));
  auto m = rainbow_perfect_matching(full);
  REQUIRE(m);
  std::set<Vertex> covered;
  for (const auto& e : *m) {
    CHECK(full.contains(e.left, e.right));
    covered.insert(e.right.begin(), e.right.end());
  }
  CHECK(covered.size() == 9);
  OneKGraph lonely = full;
  lonely.slice(2) = KGraph(3, 9);
  CHECK_FALSE(rainbow_perfect_matching(lonely));
}

TEST_CASE("embedding on a complete system") {
  HypergraphSystem s = testing::complete_system(3, 48, 48);
  EmbedParams p;
  p.t0 = 6;
  p.q = 3;
  EmbedReport r = embed_path_cover(s, p, 1);
  CHECK_FALSE(r.family.paths.empty());
  CHECK(check_rainbow_family(s, r.family.paths).ok);
  CHECK(r.accounting_ok);
  HypergraphSystem empty(3, 24, 24);
  EmbedReport z = embed_path_cover(empty, p, 1);
  CHECK(z.family.paths.empty());
  CHECK(z.uncovered == 24);
}

TEST_CASE("greedy cover") {
  HypergraphSystem s = testing::complete_system(3, 12, 12);
  RainbowFamily f = greedy_path_cover(s, Rational(1, 10), 3, 1);
  CHECK(f.uncovered.size() <= 1);
  CHECK(check_rainbow_family(s, f.paths).ok);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenParams g;
    g.kind = GenKind::Random;
    g.n = 15;
    g.p = Rational(6, 10);
    g.seed = seed;
    HypergraphSystem r = generate(g);
    RainbowFamily h = greedy_path_cover(r, Rational(1, 10), 4, seed);
    CHECK(check_rainbow_family(r, h.paths).ok);
    std::size_t covered = h.uncovered.size();
    for (const auto& p : h.paths) {
      CHECK(p.vertices.size() >= 4);
      covered += p.vertices.size();
    }
    CHECK(covered == 15);
  }
}
