#include <doctest.h>

#include <set>

#include "rhc/connector.hpp"
#include "rhc/generate.hpp"
#include "rhc/random.hpp"
#include "support.hpp"

using namespace rhc;

namespace {

std::vector<Color> range(int lo, int hi) {
  std::vector<Color> out;
  for (int c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

bool connects(const TightWalk& p, const Tuple& e1, const Tuple& e2, int k) {
  Ends e = ends(p, k);
  return e.first == e1 && e.second == e2;
}

} // namespace

TEST_CASE("cascade parameters") {
  CascadeParams p = CascadeParams::defaults(3, 30, Rational(3, 10));
  CHECK(p.color_budget == 65);
  CHECK(p.witness_count == 3);
  CHECK(p.degree_floor == 6);
  CHECK(p.small_threshold == 15);
  CHECK(p.max_depth == 2 + 23 + 1);
  CascadeParams d = CascadeParams::desk(3, 30, Rational(3, 10));
  CHECK(d.color_budget == 65);
  CHECK(d.witness_count == 1);
  CHECK(d.degree_floor == 1);
  CHECK(d.small_threshold == 1);
  CascadeParams bad = d;
  bad.degree_floor = 0;
  CHECK_THROWS(bad.validate(3));
}

TEST_CASE("cascade levels grow in a complete system") {
  HypergraphSystem s = testing::complete_system(3, 10, 10);
  CascadeParams p = CascadeParams::desk(3, 10, Rational(3, 10));
  Cascade c = grow_cascade(s, Tuple{1, 2}, range(1, 10), p, 3);
  CHECK(c.depth() == 3);
  CHECK(c.level(0).nodes == std::vector<Tuple>{{2}});
  CHECK(c.level(1).nodes.size() == 8);
  for (int j = 1; j <= 3; ++j) {
    CHECK(c.level(j).colors == std::vector<Color>{j});
    for (const auto& node : c.level(j).nodes) CHECK((node[0] != 1 && node[0] != 2));
  }
}

TEST_CASE("first level of a complete cascade and an empty first colour") {
  HypergraphSystem s = testing::complete_system(3, 20, 20);
  CascadeParams p = CascadeParams::desk(3, 20, Rational(3, 10));
  CHECK(grow_cascade(s, Tuple{1, 2}, range(1, 20), p, 1).level(1).nodes.size() == 18);
  s.graph(1) = KGraph(3, 20);
  Cascade c = grow_cascade(s, Tuple{1, 2}, range(1, 20), p, 3);
  CHECK(c.level(1).nodes.empty());
  CHECK(c.empty_level() == 1);
}

TEST_CASE("extracted paths are rainbow and avoid W") {
  GenParams g;
  g.kind = GenKind::Random;
  g.n = 30;
  g.p = Rational(9, 10);
  g.seed = 4;
  HypergraphSystem s = generate(g);
  CascadeParams p = CascadeParams::desk(3, 30, Rational(1, 10));
  Rng rng(9);
  int extracted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Cascade c = grow_cascade(s, Tuple{1, 2}, range(1, 30), p, 4);
    const int j = static_cast<int>(uniform_int(rng, 1, c.depth()));
    if (c.level(j).edges.empty()) continue;
    const int edge = static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(c.level(j).edges.size()) - 1));
    std::vector<Vertex> avoid{static_cast<Vertex>(uniform_int(rng, 3, 30))};
    ExtractResult r = extract_path(c, j, edge, avoid);
    if (!r.path) continue;
    ++extracted;
    CHECK(verify_walk(s, *r.path).ok());
    CHECK(r.path->vertices.size() == static_cast<std::size_t>(j + 2));
    CHECK(std::find(r.path->vertices.begin(), r.path->vertices.end(), avoid[0]) == r.path->vertices.end());
    CHECK(r.path->vertices[0] == 1);
    CHECK(r.path->vertices[1] == 2);
  }
  CHECK(extracted > 50);
}

TEST_CASE("connect on a complete system stays within budget") {
  HypergraphSystem s = testing::complete_system(3, 30, 30);
  CascadeParams p = CascadeParams::defaults(3, 30, Rational(3, 10));
  ConnectResult r = connect(s, Tuple{1, 2}, Tuple{3, 4}, range(1, 30), p);
  REQUIRE(r.path);
  CHECK(verify_walk(s, *r.path).ok());
  CHECK(connects(*r.path, Tuple{1, 2}, Tuple{3, 4}, 3));
  CHECK(r.path->vertices.size() <= static_cast<std::size_t>(p.color_budget + 2));
  for (Color c : r.path->colors) CHECK((c >= 1 && c <= 30));
}

TEST_CASE("shortest connector on a small complete system") {
  HypergraphSystem s = testing::complete_system(3, 8, 8);
  ConnectResult r = connect_bfs_fallback(s, Tuple{1, 2}, Tuple{3, 4}, {5, 6, 7, 8}, 8);
  REQUIRE(r.path);
  CHECK(r.path->vertices == std::vector<Vertex>{1, 2, 4, 3});
  CHECK(verify_walk(s, *r.path).ok());
  CHECK(std::set<Color>(r.path->colors.begin(), r.path->colors.end()).size() == 2);
}

TEST_CASE("fallback respects forbidden vertices and reports exhaustion") {
  HypergraphSystem s(3, 6, 6);
  s.graph(1).add_edge(Tuple{1, 2, 5});
  s.graph(2).add_edge(Tuple{2, 5, 4});
  s.graph(3).add_edge(Tuple{5, 4, 3});
  ConnectResult r = connect_bfs_fallback(s, Tuple{1, 2}, Tuple{3, 4}, {1, 2, 3}, 6);
  REQUIRE(r.path);
  CHECK(r.path->vertices == std::vector<Vertex>{1, 2, 5, 4, 3});
  CHECK_FALSE(connect_bfs_fallback(s, Tuple{1, 2}, Tuple{3, 4}, {1, 2, 3}, 6, {5}).path);
  CHECK_FALSE(connect_bfs_fallback(s, Tuple{1, 2}, Tuple{3, 4}, {1, 2}, 6).path);
  CHECK_FALSE(connect_bfs_fallback(testing::complete_system(3, 8, 8), Tuple{1, 2}, Tuple{3, 4}, {}, 8).path);
}

TEST_CASE("cascade and fallback agree on dense systems") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams g;
    g.kind = GenKind::Random;
    g.n = 14;
    g.p = Rational(85, 100);
    g.seed = seed;
    HypergraphSystem s = generate(g);
    CascadeParams p = CascadeParams::desk(3, 14, Rational(1, 10));
    ConnectResult a = connect(s, Tuple{1, 2}, Tuple{3, 4}, range(1, 14), p);
    if (!a.path) continue;
    CHECK(verify_walk(s, *a.path).ok());
    ConnectResult b = connect_bfs_fallback(s, Tuple{1, 2}, Tuple{3, 4}, range(1, 14), a.path->vertices.size());
    REQUIRE(b.path);
    CHECK(b.path->vertices.size() <= a.path->vertices.size());
    CHECK(connects(*b.path, Tuple{1, 2}, Tuple{3, 4}, 3));
  }
}

TEST_CASE("connect rejects malformed ends") {
  HypergraphSystem s = testing::complete_system(3, 10, 10);
  CascadeParams p = CascadeParams::desk(3, 10, Rational(1, 10));
  CHECK_THROWS(connect(s, Tuple{1, 2}, Tuple{2, 3}, range(1, 10), p));
  CHECK_THROWS(connect(s, Tuple{1}, Tuple{2, 3}, range(1, 10), p));
  HypergraphSystem s2 = testing::complete_system(2, 10, 10);
  ConnectResult r = connect(s2, Tuple{1}, Tuple{2}, range(1, 10), CascadeParams::desk(2, 10, Rational(1, 10)));
  CHECK_FALSE(r.path);
}

TEST_CASE("window matching") {
  CHECK(match_windows({{1, 2}, {1}}) == std::vector<Color>{2, 1});
  CHECK_FALSE(match_windows({{1}, {1}}));
  CHECK(match_windows({}) == std::vector<Color>{});
}
