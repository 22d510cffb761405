#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rhc/hypergraph.hpp"
#include "rhc/rational.hpp"
#include "rhc/walk.hpp"

namespace rhc {

// An r-partite r-graph. Vertices are 0-based within each part; every edge has
// one vertex per part, listed in part order. labels[i][v], when present, is
// the global id of vertex v of part i.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;
  explicit PartiteHypergraph(std::vector<int> part_sizes);

  int parts() const { return static_cast<int>(sizes_.size()); }
  int part_size(int i) const { return sizes_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& part_sizes() const { return sizes_; }
  int max_part_size() const;

  bool add_edge(const std::vector<int>& e);
  bool contains(const std::vector<int>& e) const { return edges_.count(e) != 0; }
  const std::set<std::vector<int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::vector<std::vector<int>> labels;
  int label(int part, int v) const;

 private:
  std::vector<int> sizes_;
  std::set<std::vector<int>> edges_;
};

// Edges with every coordinate in the chosen subsets, over the product of the
// subset sizes. Throws on an empty subset.
Rational density(const PartiteHypergraph& g, const std::vector<std::vector<int>>& subsets);
Rational density(const PartiteHypergraph& g);

// Crossing edges of a k-graph between disjoint vertex sets A_1..A_k.
Rational density(const KGraph& g, const std::vector<std::vector<Vertex>>& parts);

struct RegularityVerdict {
  bool violation_found = false;
  Rational worst_deviation = 0;
  std::vector<std::vector<int>> witness;
  int trials = 0;
  // Sampling can only refute regularity.
  std::string label() const { return violation_found ? "irregular" : "no violation found"; }
};

// Samples `trials` subset tuples with |A_i| >= eps |V_i|, sizes uniform over
// the admissible range, and compares each density with the full density.
RegularityVerdict estimate_regularity(const PartiteHypergraph& g, const Rational& epsilon, int trials,
                                      std::uint64_t seed);

// A (0,k-1)-path: edge i is {color_vertices[i], vertices[i..i+k-1]}. Part 0
// supplies colour vertices; vertices[j] lies in part parts[j] in 1..k.
struct ZeroKPath {
  std::vector<int> color_vertices;
  std::vector<int> vertices;
  std::vector<int> parts;

  std::size_t length() const { return color_vertices.size(); }
  std::size_t vertex_count() const { return vertices.size(); }
};

// Checks distinctness, the part pattern (any k consecutive vertices meet
// every part once) and that each edge is in g.
bool valid_zero_k_path(const PartiteHypergraph& g, const ZeroKPath& p);

// Prunes every edge through a legal (k-1)-subset of degree d with
// 0 < d < c m^2 / k until none remains, then grows a maximal path greedily
// in both directions. m is the largest part size. Throws std::invalid_argument
// if |E| < c m^{k+1} or the survivor is empty.
ZeroKPath extract_zero_k_path(const PartiteHypergraph& g, const Rational& c);

struct CoverReport {
  std::vector<ZeroKPath> paths;
  int covered_colors = 0;
  int target_colors = 0;  // ceil((1 - 2k eps) m)
  std::string stop_reason;
};

// Repeats extraction on the uncovered remainder while paths have at least
// eps (alpha - eps) m / k vertices; stops at the coverage target or when the
// remainder thins out.
CoverReport cover_family(const PartiteHypergraph& g, const Rational& alpha, const Rational& epsilon);

// Uses g.labels when present, the raw ids otherwise.
TightWalk zero_k_to_rainbow(const ZeroKPath& p, const PartiteHypergraph& g);
ZeroKPath rainbow_to_zero_k(const TightWalk& walk, int k);

} // namespace rhc
