#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rhc/cli.hpp"
#include "rhc/io.hpp"
#include "rhc/walk.hpp"
#include "support.hpp"

using namespace rhc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("rhc_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

} // namespace

TEST_CASE("check prints the degree report") {
  std::string f = temp_file("c6.rhg", to_rhg(testing::complete_system(3, 6, 6)));
  Run r = run({"check", f});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("global_min=4") != std::string::npos);
  Run w = run({"check", f, "--walk", "C 6 1 2 3 4 5 6 ; 1 2 3 4 5 6"});
  CHECK(w.code == kExitOk);
  CHECK(w.out.find("hamilton=yes") != std::string::npos);
  Run bad = run({"check", f, "--walk", "C 6 1 2 3 4 5 6 ; 1 1 2 3 4 5"});
  CHECK(bad.code == kExitNegative);
}

TEST_CASE("oracle negative exits 1") {
  HypergraphSystem s = testing::complete_system(3, 6, 6);
  s.graph(2) = KGraph(3, 6);
  std::string f = temp_file("empty_colour.rhg", to_rhg(s));
  Run r = run({"hamilton", f, "--method", "oracle"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("not exists") != std::string::npos);
}

TEST_CASE("malformed input exits 2 with a position") {
  std::string f = temp_file("bad.rhg", "RHG 2\n3 4 4\n");
  Run r = run({"check", f});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find(":1:") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);
  CHECK(run({"check", "/nonexistent/file.rhg"}).code == kExitUsage);
  CHECK(run({"gen", "--n", "6", "--kind", "nope"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("gen output round trips and is seed-stable") {
  Run a = run({"gen", "--kind", "random", "--n", "8", "--p", "0.6", "--seed", "5"});
  Run b = run({"gen", "--kind", "random", "--n", "8", "--p", "0.6", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(to_rhg(parse_rhg(a.out)) == a.out);
}

TEST_CASE("hamilton witness re-verifies through check") {
  std::string f = temp_file("c7.rhg", to_rhg(testing::complete_system(3, 7, 7)));
  Run r = run({"hamilton", f, "--method", "both", "--seed", "2", "--desk"});
  CHECK(r.code == kExitOk);
  std::string first = r.out.substr(0, r.out.find('\n'));
  CHECK(run({"check", f, "--walk", first}).code == kExitOk);
}

TEST_CASE("connect, absorbers and cover") {
  std::string f = temp_file("c10.rhg", to_rhg(testing::complete_system(3, 10, 10)));
  Run c = run({"connect", f, "--e1", "1,2", "--e2", "3,4", "--colors", "1,2,3,4,5,6", "--desk"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("levels=") != std::string::npos);
  Run a = run({"absorbers", f, "--target", "x:1,1", "--count"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "count=" + std::to_string(9 * 8 * 7 * 6 * 9 * 8) + "\n");
  Run e = run({"absorbers", f, "--target", "ends:1,2;3,4;5,6", "--limit", "2"});
  CHECK(e.code == kExitOk);
  CHECK(run({"absorbers", f, "--target", "ends:1,2;2,4;5,6"}).code == kExitUsage);
  Run g = run({"cover", f, "--mode", "greedy", "--delta", "0.1", "--seed", "3"});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("mode,n,paths,covered,uncovered,within_delta\n") != std::string::npos);
}
