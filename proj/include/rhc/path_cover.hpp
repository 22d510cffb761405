#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhc/hypergraph.hpp"
#include "rhc/partite.hpp"
#include "rhc/rational.hpp"
#include "rhc/walk.hpp"

namespace rhc {

// (1,k)-graph: left vertices 1..left, right vertices 1..right, edges {i} ∪ e
// with e a k-subset of the right side. Stored as one k-graph per left vertex.
class OneKGraph {
 public:
  OneKGraph(int k, int left, int right);
  explicit OneKGraph(std::vector<KGraph> slices);

  int k() const { return k_; }
  int left() const { return static_cast<int>(slices_.size()); }
  int right() const { return right_; }
  const KGraph& slice(int i) const { return slices_.at(static_cast<std::size_t>(i - 1)); }
  KGraph& slice(int i) { return slices_.at(static_cast<std::size_t>(i - 1)); }
  bool add_edge(int i, const Tuple& e) { return slice(i).add_edge(e); }
  bool contains(int i, const Tuple& e) const { return slice(i).contains(e); }
  std::size_t edge_count() const;

  // δ_{1,k-1}: least number of right vertices completing one left vertex and
  // k-1 right vertices to an edge.
  int min_codegree() const;

  // Sub-graph on the given left and right vertices, relabelled 1.. in the
  // order given.
  OneKGraph induced(const std::vector<int>& left, const std::vector<int>& right) const;

 private:
  int k_;
  int right_;
  std::vector<KGraph> slices_;
};

// H*: colour i on the left, one edge per coloured edge.
OneKGraph build_auxiliary(const HypergraphSystem& system);

struct ClusterGeometry {
  std::vector<Color> v0_colors;
  std::vector<Vertex> v0_vertices;
  std::vector<std::vector<Color>> color_clusters;   // I_1..I_t
  std::vector<std::vector<Vertex>> vertex_clusters; // W_1..W_t
};

// Equitable random split into t clusters per side; remainders go to V0.
ClusterGeometry random_geometry(int m, int n, int t, std::uint64_t seed);

struct ClusterCandidate {
  int color_cluster = 0;               // 1-based
  std::vector<int> vertex_clusters;    // ascending, 1-based
  Rational density;
  Rational worst_deviation;
  bool regular = false;
  bool edge = false;
};

struct ClusterPartition {
  ClusterGeometry geometry;
  int t = 0;
  int cluster_size = 0;
  Rational epsilon;
  Rational d;
  int trials = 0;
  std::vector<ClusterCandidate> candidates;
  OneKGraph cluster_graph{2, 1, 2};    // K on t colour clusters and t vertex clusters

  std::size_t edge_count() const { return cluster_graph.edge_count(); }
};

// The (k+1)-partite host of one cluster tuple: part 0 the colour cluster,
// parts 1..k the vertex clusters, labelled with global ids.
PartiteHypergraph cluster_host(const HypergraphSystem& system, const std::vector<Color>& colors,
                               const std::vector<std::vector<Vertex>>& vertex_parts);

// Keeps a cluster tuple iff its exact density is at least d and sampling
// finds no regularity violation. Throws on unequal cluster sizes.
ClusterPartition build_cluster_graph(const HypergraphSystem& system, const ClusterGeometry& geometry,
                                     const Rational& epsilon, const Rational& d, int trials, std::uint64_t seed);

struct InheritanceReport {
  std::uint64_t violating_count = 0;
  std::uint64_t subsets = 0;
  Rational degree_bound;  // (1/2 + gamma/4) t
  bool pass = false;      // count <= k sqrt(eps) t^k, compared exactly
  bool diagnostic_only = false;
};

InheritanceReport check_inheritance(const ClusterPartition& K, const Rational& gamma);

struct PartitionClass {
  std::vector<int> left;
  std::vector<int> right;
  bool good = false;
  int min_codegree = 0;
};

struct RandomPartition {
  std::vector<PartitionClass> classes;
  Rational good_fraction;
};

// Random equitable split of F (left t/k, right t) into t/Q classes of Q/k
// left and Q right vertices. A class is good iff
// δ_{1,k-1}(F[S]) >= (1/2 + gamma/2)(Q - k + 1).
RandomPartition random_partition(const OneKGraph& f, int q, const Rational& gamma, std::uint64_t seed);

struct MatchingEdge {
  int left = 0;
  Tuple right;
};

// Exact search for a perfect matching covering every vertex of F.
std::optional<std::vector<MatchingEdge>> rainbow_perfect_matching(const OneKGraph& f,
                                                                  std::uint64_t step_limit = 50'000'000);

struct RainbowFamily {
  std::vector<TightWalk> paths;
  std::vector<Vertex> uncovered;
};

struct EmbedParams {
  Rational epsilon{1, 20};
  int t0 = 6;
  int q = 3;
  Rational gamma{1, 10};
  Rational delta{1, 10};
  int trials = 20;
  std::optional<Rational> d;  // default gamma / 6
};

struct EmbedReport {
  RainbowFamily family;
  std::size_t uncovered = 0;
  std::size_t v0_vertices = 0;
  std::vector<std::size_t> leftover;   // |W*_j| per vertex cluster
  bool accounting_ok = false;          // uncovered == |V0 ∩ V| + Σ |W*_j|
  bool within_delta = false;           // uncovered <= delta n
  std::size_t cluster_edges = 0;
  std::vector<Rational> good_fractions;  // per round
  std::optional<BigInt> big_l;           // ceil(3 k t0 / (eps (gamma/6 - eps)))
  std::string stage_failure;
};

EmbedReport embed_path_cover(const HypergraphSystem& system, const EmbedParams& params, std::uint64_t seed);

struct GreedyCoverOptions {
  std::optional<std::vector<Vertex>> vertices;  // default: all
  std::optional<std::vector<Color>> colors;     // default: all
  std::size_t stall_limit = 0;                  // 0: 4 n
};

// Randomised greedy cover: grow rainbow tight paths from random unused edges
// in both directions until stuck, keep those with at least min_len vertices.
// Stops once at most delta |V| vertices are uncovered or attempts stall.
RainbowFamily greedy_path_cover(const HypergraphSystem& system, const Rational& delta, std::size_t min_len,
                                std::uint64_t seed, const GreedyCoverOptions& options = {});

} // namespace rhc
