#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rhc/rational.hpp"

namespace rhc {

using Vertex = int;  // 1-based
using Color = int;   // 1-based
using Tuple = std::vector<Vertex>;

inline constexpr int kMaxUniformity = 8;

// Binomial coefficients for colex ranking of k-subsets of [1, n].
class BinomialTable {
 public:
  BinomialTable() = default;
  BinomialTable(int n, int k);
  std::uint64_t operator()(int a, int b) const {
    if (b < 0 || a < b) return 0;
    return table_[static_cast<std::size_t>(a) * (k_ + 1) + b];
  }

 private:
  int k_ = 0;
  std::vector<std::uint64_t> table_;
};

// A k-uniform hypergraph on vertices 1..n. Edges are kept lexicographically
// sorted; membership is a bitset indexed by colex rank.
class KGraph {
 public:
  KGraph() = default;
  KGraph(int k, int n);
  KGraph(int k, int n, std::vector<Tuple> edges);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Tuple>& edges() const { return edges_; }

  // Adds an edge given in any vertex order. Returns false if already present.
  // Throws on invalid vertices or wrong size.
  bool add_edge(std::span<const Vertex> e);

  // Membership test for k vertices in any order; false on repeated vertices.
  bool contains(std::span<const Vertex> e) const;

  // Sorted neighbours of a (k-1)-set: vertices v with S + v an edge.
  std::span<const Vertex> neighbors(std::span<const Vertex> s) const;

  // Number of edges containing S, |S| <= k.
  int codegree(std::span<const Vertex> s) const;

  // Minimum (k-1)-degree over all (k-1)-subsets.
  int min_codegree() const;

  std::uint64_t rank(std::span<const Vertex> sorted) const;

  friend bool operator==(const KGraph& a, const KGraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  struct NeighborIndex {
    std::once_flag once;
    std::vector<std::vector<Vertex>> lists;
  };

  void check_vertex(Vertex v) const;
  const NeighborIndex& index() const;

  int k_ = 0;
  int n_ = 0;
  std::shared_ptr<const BinomialTable> binom_;
  std::vector<Tuple> edges_;
  std::vector<std::uint64_t> bits_;
  std::shared_ptr<NeighborIndex> index_;
};

// A family of m k-graphs on a shared vertex set; graph i carries colour i.
class HypergraphSystem {
 public:
  HypergraphSystem() = default;
  HypergraphSystem(int k, int n, int m);
  HypergraphSystem(std::vector<KGraph> graphs);

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(graphs_.size()); }

  const KGraph& graph(Color c) const;
  KGraph& graph(Color c);
  const std::vector<KGraph>& graphs() const { return graphs_; }

  bool has_edge(Color c, std::span<const Vertex> e) const { return graph(c).contains(e); }
  bool valid_color(Color c) const { return c >= 1 && c <= m(); }
  bool valid_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  std::size_t total_edges() const;

  friend bool operator==(const HypergraphSystem&, const HypergraphSystem&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<KGraph> graphs_;
};

struct DegreeReport {
  std::vector<int> per_color;  // minimum (k-1)-degree of each colour
  int global_min = 0;
  Rational gamma_max;          // global_min / n - 1/2
};

int codegree(const KGraph& h, std::span<const Vertex> s);

DegreeReport degree_report(const HypergraphSystem& system);

// True iff every colour satisfies min (k-1)-degree >= (1/2 + gamma) n.
bool satisfies_gamma(const HypergraphSystem& system, const Rational& gamma);

struct Fact31Witness {
  int bound = 0;           // 1 or 2
  Color color_i = 0;
  Color color_j = 0;       // bound 2 only
  Tuple set;               // S for bound 1
  long long observed = 0;
  Rational required;
};

struct Fact31Result {
  bool precondition_met = false;
  bool bound1_holds = true;
  bool bound2_holds = true;
  std::vector<Fact31Witness> witnesses;  // empty when both hold
  std::size_t checks = 0;
};

// Neighbourhood lower bounds for (k-1)-sets in a system satisfying the
// gamma codegree condition:
//   |N_i(S) & V0'| >= |V0'| - n/2 + gamma n + k - 1, V0' = V0 \ S, S in {S1,S2}
//   |N_i(S1) & N_j(S2)| >= 2 gamma n + |S1 & S2|          for all i, j.
// When the condition fails the inequalities are evaluated and reported but
// precondition_met is false.
Fact31Result check_fact31(const HypergraphSystem& system, std::span<const Vertex> s1,
                          std::span<const Vertex> s2, std::span<const Vertex> v0,
                          const Rational& gamma, std::size_t max_witnesses = 8);

} // namespace rhc
