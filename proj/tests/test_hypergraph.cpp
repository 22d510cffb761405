#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "rhc/generate.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/io.hpp"
#include "rhc/random.hpp"
#include "support.hpp"

using namespace rhc;

namespace {

int recount_codegree(const KGraph& g, const Tuple& s) {
  int d = 0;
  for (const auto& e : g.edges())
    if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return std::find(e.begin(), e.end(), v) != e.end(); })) ++d;
  return d;
}

int recount_min(const KGraph& g) {
  int best = -1;
  const int n = g.n(), k = g.k();
  Tuple s;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(s.size()) == k - 1) {
      int d = recount_codegree(g, s);
      if (best < 0 || d < best) best = d;
      return;
    }
    for (int v = from; v <= n; ++v) {
      s.push_back(v);
      rec(v + 1);
      s.pop_back();
    }
  };
  rec(1);
  return best;
}

} // namespace

TEST_CASE("codegree counts edges through a set") {
  KGraph g(3, 5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
  CHECK(g.codegree(Tuple{1, 2}) == 2);
  CHECK(g.codegree(Tuple{2, 1}) == 2);
  CHECK(g.codegree(Tuple{4}) == 2);
  CHECK(g.codegree(Tuple{1, 5}) == 0);
  CHECK(g.min_codegree() == 0);
  auto nb = g.neighbors(Tuple{2, 1});
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{3, 4});
}

TEST_CASE("edge membership ignores order and rejects repeats") {
  KGraph g(3, 5);
  CHECK(g.add_edge(Tuple{3, 1, 2}));
  CHECK_FALSE(g.add_edge(Tuple{2, 3, 1}));
  CHECK(g.contains(Tuple{1, 3, 2}));
  CHECK_FALSE(g.contains(Tuple{1, 1, 2}));
  CHECK_THROWS(g.add_edge(Tuple{1, 2, 6}));
  CHECK_THROWS(g.add_edge(Tuple{1, 2}));
}

TEST_CASE("degree report matches a recount on random systems") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenParams p;
    p.kind = GenKind::Random;
    p.n = 8;
    p.p = Rational(9, 10);
    p.seed = seed;
    HypergraphSystem s = generate(p);
    DegreeReport r = degree_report(s);
    int global = -1;
    for (Color c = 1; c <= s.m(); ++c) {
      int d = recount_min(s.graph(c));
      CHECK(r.per_color[static_cast<std::size_t>(c - 1)] == d);
      if (global < 0 || d < global) global = d;
    }
    CHECK(r.global_min == global);
    CHECK(r.gamma_max == Rational(global, 8) - Rational(1, 2));
  }
}

TEST_CASE("gamma condition on complete systems") {
  HypergraphSystem s = testing::complete_system(3, 10, 10);
  CHECK(degree_report(s).global_min == 8);
  CHECK(satisfies_gamma(s, Rational(3, 10)));
  CHECK_FALSE(satisfies_gamma(s, Rational(31, 100)));
}

TEST_CASE("neighbourhood bounds hold on gamma systems") {
  const int n = 12;
  GenParams p;
  p.kind = GenKind::Random;
  p.n = n;
  p.p = Rational(95, 100);
  p.delta_target = 7;  // (1/2 + 1/12) n
  p.seed = 3;
  HypergraphSystem s = generate(p);
  const Rational gamma(1, 12);
  REQUIRE(satisfies_gamma(s, gamma));
  Rng rng(derive_seed(7, 1));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 1);
    shuffle(all, rng);
    Tuple s1(all.begin(), all.begin() + 2);
    shuffle(all, rng);
    Tuple s2(all.begin(), all.begin() + 2);
    shuffle(all, rng);
    std::vector<Vertex> v0(all.begin(), all.begin() + uniform_int(rng, 1, n));
    Fact31Result r = check_fact31(s, s1, s2, v0, gamma);
    CHECK(r.precondition_met);
    CHECK(r.bound1_holds);
    CHECK(r.bound2_holds);
  }
}

TEST_CASE("neighbourhood bounds are reported, not enforced, below the condition") {
  HypergraphSystem s(3, 6, 6);
  Fact31Result r = check_fact31(s, Tuple{1, 2}, Tuple{3, 4}, Tuple{1, 2, 3, 4, 5, 6}, Rational(1, 10));
  CHECK_FALSE(r.precondition_met);
  CHECK_FALSE(r.bound2_holds);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("rhg round trip") {
  GenParams p;
  p.kind = GenKind::Random;
  p.n = 9;
  p.k = 4;
  p.m = 5;
  p.p = Rational(1, 2);
  p.seed = 11;
  HypergraphSystem s = generate(p);
  std::string text = to_rhg(s);
  CHECK(parse_rhg(text) == s);
  CHECK(to_rhg(parse_rhg(text)) == text);
}

TEST_CASE("rhg errors carry positions") {
  auto position = [](const std::string& text) {
    try {
      parse_rhg(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0, 0);
  };
  CHECK(position("RHX 1\n").first == 1);
  CHECK(position("RHG 1\n3 4 1\nc 1 1\n1 2 5\n").first == 4);
  CHECK(position("RHG 1\n3 4 1\nc 1 2\n1 2 3\n").first > 0);
  CHECK(position("RHG 1\n3 4 1\nc 1 1\n1 2 3 x\n").first == 4);
}
