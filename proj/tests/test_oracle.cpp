#include <doctest.h>

#include <sstream>

#include "rhc/experiment.hpp"
#include "rhc/generate.hpp"
#include "rhc/io.hpp"
#include "rhc/oracle.hpp"
#include "support.hpp"

using namespace rhc;

namespace {

HypergraphSystem random_system(int n, Rational p, std::uint64_t seed) {
  GenParams g;
  g.kind = GenKind::Random;
  g.n = n;
  g.p = p;
  g.seed = seed;
  return generate(g);
}

} // namespace

TEST_CASE("oracle on complete systems") {
  OracleResult r = oracle_hamilton(testing::complete_system(3, 6, 6));
  CHECK(r.exists);
  REQUIRE(r.witness);
  CHECK(r.witness->vertices == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
  CHECK(testing::plain_hamilton(testing::complete_system(3, 6, 6), *r.witness));
}

TEST_CASE("an empty colour rules out every cycle") {
  HypergraphSystem s = testing::complete_system(3, 7, 7);
  s.graph(4) = KGraph(3, 7);
  OracleResult r = oracle_hamilton(s);
  CHECK_FALSE(r.exists);
  CHECK_FALSE(r.witness);
  CHECK(r.orderings_scanned == 0);
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(oracle_hamilton(HypergraphSystem(3, 6, 5)), std::invalid_argument);
  CHECK_THROWS_AS(oracle_hamilton(testing::complete_system(3, 12, 12)), std::invalid_argument);
  CHECK_NOTHROW(oracle_hamilton(testing::complete_system(3, 8, 8), 8));
}

TEST_CASE("two oracles agree on small random systems") {
  for (int n = 5; n <= 7; ++n)
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      HypergraphSystem s = random_system(n, Rational(static_cast<long long>(3 + seed % 6), 10), seed * 31 + static_cast<std::uint64_t>(n));
      OracleResult r = oracle_hamilton(s);
      CHECK(r.exists == testing::backtrack_hamilton(s));
      if (r.exists) CHECK(testing::plain_hamilton(s, *r.witness));
    }
}

TEST_CASE("identical colours reduce to a plain tight Hamilton cycle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenParams g;
    g.kind = GenKind::Identical;
    g.n = 7;
    g.p = Rational(1, 2);
    g.seed = seed;
    HypergraphSystem s = generate(g);
    for (Color c = 2; c <= 7; ++c) REQUIRE(s.graph(c) == s.graph(1));
    // with one colour class any tight Hamilton cycle of H colours bijectively
    HypergraphSystem single(std::vector<KGraph>(7, s.graph(1)));
    CHECK(oracle_hamilton(s).exists == testing::backtrack_hamilton(single));
  }
}

TEST_CASE("generators") {
  GenParams g;
  g.n = 6;
  CHECK(generate(g).total_edges() == 120);
  g.kind = GenKind::Random;
  g.p = 0;
  CHECK(generate(g).total_edges() == 0);
  g.n = 9;
  g.p = Rational(1, 2);
  g.seed = 3;
  CHECK(to_rhg(generate(g)) == to_rhg(generate(g)));
  GenParams other = g;
  other.seed = 4;
  CHECK_FALSE(generate(other) == generate(g));
  g.p = Rational(97, 100);
  g.delta_target = 5;
  CHECK(degree_report(generate(g)).global_min >= 5);
  CHECK(conjectured_threshold(8, 3) == 4);
  CHECK(parse_kind("subthreshold") == GenKind::Subthreshold);
  CHECK_FALSE(parse_kind("bogus"));
}

TEST_CASE("subthreshold candidates hit the target and get labelled") {
  int labelled = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenParams g;
    g.kind = GenKind::Subthreshold;
    g.n = 8;
    g.delta_target = 3;
    g.seed = seed;
    HypergraphSystem s = generate(g);
    for (int d : degree_report(s).per_color) CHECK(d == 3);
    OracleResult r = oracle_hamilton(s);
    if (r.exists) CHECK(testing::plain_hamilton(s, *r.witness));
    ++labelled;
  }
  CHECK(labelled == 5);
  GenParams bad;
  bad.kind = GenKind::Subthreshold;
  bad.n = 8;
  bad.delta_target = 1;
  bad.retries = 3;
  CHECK_THROWS_AS(generate(bad), std::runtime_error);
  bad.delta_target = 7;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("experiment rows are deterministic across job counts") {
  ExperimentParams p;
  p.n = 7;
  p.sweep = {"0.5", "1"};
  p.trials = 4;
  p.seed = 9;
  p.run_pipeline = false;
  std::ostringstream a, b;
  write_csv(a, run_experiment(p));
  p.jobs = 3;
  write_csv(b, run_experiment(p));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  auto points = summarize(run_experiment(p));
  REQUIRE(points.size() == 2);
  CHECK(points[1].oracle_yes == 4);
}
