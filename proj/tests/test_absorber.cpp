#include <doctest.h>

#include <set>

#include "rhc/absorber.hpp"
#include "rhc/generate.hpp"
#include "support.hpp"

using namespace rhc;

namespace {

// The gadget x1..x4 = 1..4 with pattern (1, 2) absorbing x = 5 with colour 3.
HypergraphSystem single_vertex_gadget() {
  HypergraphSystem s(3, 5, 3);
  s.graph(1).add_edge(Tuple{1, 2, 3});
  s.graph(2).add_edge(Tuple{2, 3, 4});
  s.graph(3).add_edge(Tuple{1, 2, 5});
  s.graph(1).add_edge(Tuple{2, 5, 3});
  s.graph(2).add_edge(Tuple{5, 3, 4});
  return s;
}

// x1..x4 = 1..4, u = (5,6), v = (7,8), pattern (1,2), o = (3,4).
HypergraphSystem ends_gadget() {
  HypergraphSystem s(3, 8, 5);
  s.graph(1).add_edge(Tuple{1, 2, 3});
  s.graph(2).add_edge(Tuple{2, 3, 4});
  s.graph(1).add_edge(Tuple{1, 2, 5});
  s.graph(2).add_edge(Tuple{2, 5, 6});
  s.graph(3).add_edge(Tuple{7, 8, 3});
  s.graph(4).add_edge(Tuple{8, 3, 4});
  return s;
}

} // namespace

TEST_CASE("vertex absorber of the first drawing") {
  HypergraphSystem s = single_vertex_gadget();
  AbsorberRecord rec{{1, 2, 3, 4}, {1, 2}, VertexTarget{5, 3}};
  CHECK(is_absorber(s, rec));
  TightWalk out = absorb_vertex(s, rec.gadget().walk(), rec);
  CHECK(out.vertices == std::vector<Vertex>{1, 2, 5, 3, 4});
  CHECK(out.colors == std::vector<Color>{3, 1, 2});
  CHECK(verify_walk(s, out).ok());
  CHECK(count_absorbers(s, VertexTarget{5, 3}) == 1);
  CHECK(testing::brute_absorber_count(s, VertexTarget{5, 3}) == 1);
}

TEST_CASE("ends absorber of the second drawing") {
  HypergraphSystem s = ends_gadget();
  EndsTarget t{{5, 6}, {7, 8}, {3, 4}};
  AbsorberRecord rec{{1, 2, 3, 4}, {1, 2}, t};
  CHECK(is_absorber(s, rec));
  CHECK(count_absorbers(s, t) == testing::brute_absorber_count(s, t));
  HypergraphSystem missing = s;
  missing.graph(4) = KGraph(3, 8);
  CHECK_FALSE(is_absorber(missing, rec));
}

TEST_CASE("absorbing a path into a cycle through the gadget") {
  HypergraphSystem s = testing::complete_system(3, 10, 10);
  TightWalk cycle{{1, 2, 3, 4, 9, 10}, {1, 2, 5, 6, 7, 8}, true};
  REQUIRE(verify_walk(s, cycle).ok());
  AbsorberRecord rec{{1, 2, 3, 4}, {1, 2}, EndsTarget{{5, 6}, {7, 8}, {3, 4}}};
  TightWalk path{{5, 6, 7, 8}, {9, 10}, false};
  TightWalk out = absorb_path(s, cycle, rec, path);
  CHECK(out.vertices.size() == cycle.vertices.size() + path.vertices.size());
  CHECK(verify_walk(s, out).ok());
  CHECK(verify_hamilton(s, out));
  TightWalk clash{{5, 6, 7, 8}, {9, 5}, false};
  CHECK_THROWS(absorb_path(s, cycle, rec, clash));
}

TEST_CASE("records failing the definition") {
  HypergraphSystem s = testing::complete_system(3, 6, 6);
  CHECK_FALSE(is_absorber(s, AbsorberRecord{{1, 2, 3, 4}, {1, 2}, VertexTarget{3, 5}}));
  CHECK_FALSE(is_absorber(s, AbsorberRecord{{1, 2, 3, 4}, {1, 2}, VertexTarget{5, 2}}));
  CHECK(is_absorber(s, AbsorberRecord{{1, 2, 3, 4}, {1, 2}, VertexTarget{5, 3}}));
  CHECK(is_absorber(s, AbsorberRecord{{6, 4, 2, 1}, {5, 3}, VertexTarget{3, 1}}));
}

TEST_CASE("complete system count is the product of arrangements") {
  HypergraphSystem s = testing::complete_system(3, 6, 6);
  const std::uint64_t expected = 5 * 4 * 3 * 2 * (5 * 4);
  CHECK(testing::brute_absorber_count(s, VertexTarget{1, 1}) == expected);
  CHECK(count_absorbers(s, VertexTarget{1, 1}) == expected);
  CHECK(count_absorbers(s, VertexTarget{4, 6}) == expected);
  CHECK(absorber_count_ratio(s, VertexTarget{1, 1}, Rational(1, 6)) == Rational(2400, 108));
}

TEST_CASE("enumeration matches the tuple scan on random systems") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenParams p;
    p.kind = GenKind::Random;
    p.n = 7;
    p.p = Rational(7, 10);
    p.seed = seed;
    HypergraphSystem s = generate(p);
    const Vertex x = static_cast<Vertex>(seed % 7 + 1);
    CHECK(count_absorbers(s, VertexTarget{x, 2}) == testing::brute_absorber_count(s, VertexTarget{x, 2}));
    EndsTarget t{{1, 2}, {4, 3}, {5, 6}};
    CHECK(count_absorbers(s, t) == testing::brute_absorber_count(s, t));
    for (const auto& rec : enumerate_absorbers(s, VertexTarget{x, 2})) CHECK(is_absorber(s, rec));
  }
}

TEST_CASE("enumeration respects the limit and visits colour patterns first") {
  HypergraphSystem s = testing::complete_system(3, 7, 7);
  auto first = enumerate_absorbers(s, VertexTarget{1, 1}, 5);
  CHECK(first.size() == 5);
  auto all = enumerate_absorbers(s, VertexTarget{1, 1});
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].vertices == all[i].vertices);
  std::set<std::vector<Color>> patterns;
  for (const auto& r : all) patterns.insert(r.colors);
  CHECK(patterns.size() == 6 * 5);
}

TEST_CASE("empty colour has no vertex absorbers") {
  HypergraphSystem s = testing::complete_system(3, 6, 6);
  s.graph(2) = KGraph(3, 6);
  CHECK(count_absorbers(s, VertexTarget{1, 2}) == 0);
  CHECK(absorber_count_ratio(s, VertexTarget{1, 2}, Rational(1, 6)) == 0);
}

TEST_CASE("malformed targets") {
  HypergraphSystem s = testing::complete_system(3, 6, 6);
  CHECK_THROWS(validate_target(s, VertexTarget{7, 1}));
  CHECK_THROWS(validate_target(s, VertexTarget{1, 0}));
  CHECK_THROWS(validate_target(s, EndsTarget{{1, 2}, {2, 3}, {1, 2}}));
  CHECK_THROWS(validate_target(s, EndsTarget{{1, 2}, {3}, {1, 2}}));
}

TEST_CASE("absorb_vertex inverts") {
  HypergraphSystem s = testing::complete_system(3, 8, 8);
  TightWalk cycle{{1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}, true};
  AbsorberRecord rec{{3, 4, 5, 6}, {3, 4}, VertexTarget{8, 8}};
  TightWalk out = absorb_vertex(s, cycle, rec);
  CHECK(verify_hamilton(s, out));
  auto pos = std::find(out.vertices.begin(), out.vertices.end(), 8) - out.vertices.begin();
  TightWalk back = out;
  back.vertices.erase(back.vertices.begin() + pos);
  back.colors.erase(std::find(back.colors.begin(), back.colors.end(), 8));
  CHECK(back == cycle);
  AbsorberRecord used{{3, 4, 5, 6}, {3, 4}, VertexTarget{8, 2}};
  CHECK_THROWS(absorb_vertex(s, cycle, used));
}

TEST_CASE("sampled families are disjoint absorbers") {
  HypergraphSystem s = testing::complete_system(3, 40, 40);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SampleResult r = sample_family(s, Rational(1, 10), seed);
    CHECK(r.stats.expected_size == Rational(1, 10) * 40 / 1296);
    CHECK(r.family.well_formed(s));
    CHECK(r.family.size() == r.stats.after_filter);
    for (const auto& g : r.family.members()) CHECK(absorbs_some_target(s, g));
  }
  HypergraphSystem empty(3, 10, 10);
  CHECK(sample_family(empty, Rational(1, 10), 1).family.empty());
}

TEST_CASE("family lookup") {
  HypergraphSystem s = testing::complete_system(3, 8, 8);
  AbsorberFamily f({Gadget{{1, 2, 3, 4}, {1, 2}}, Gadget{{5, 6, 7, 8}, {3, 4}}});
  f.build_index(s);
  CHECK(f.lookup(s, VertexTarget{5, 5}) == std::vector<std::size_t>{0});
  CHECK(f.lookup(s, VertexTarget{1, 5}) == std::vector<std::size_t>{1});
  CHECK(f.lookup(s, VertexTarget{1, 1}) == std::vector<std::size_t>{1});
  CHECK(f.lookup(s, VertexTarget{1, 3}).empty());
  CHECK(intersecting(f.members()[0], Gadget{{9, 10, 11, 4}, {5, 6}}));
  CHECK(intersecting(f.members()[0], Gadget{{9, 10, 11, 12}, {5, 2}}));
}

TEST_CASE("parameter defaults") {
  CHECK(default_zeta(3, Rational(1, 10)) == Rational(1, 4) * Rational(1, 10000));
  CHECK(absorber_lower_bound(3, 6, Rational(1, 6), true) == 108);
}

TEST_CASE("gadgets that serve only an ends target are recognised") {
  // the second drawing's edges and nothing else: no vertex can be absorbed
  HypergraphSystem s(3, 8, 5);
  s.graph(1).add_edge(Tuple{1, 2, 3});
  s.graph(2).add_edge(Tuple{2, 3, 4});
  s.graph(1).add_edge(Tuple{1, 2, 5});
  s.graph(2).add_edge(Tuple{2, 5, 6});
  s.graph(3).add_edge(Tuple{7, 8, 3});
  s.graph(4).add_edge(Tuple{8, 3, 4});
  Gadget g{{1, 2, 3, 4}, {1, 2}};
  CHECK(absorbs_some_target(s, g));
  s.graph(2) = KGraph(3, 8, {{2, 3, 4}});
  CHECK_FALSE(absorbs_some_target(s, g));
}
