#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhc/hypergraph.hpp"
#include "rhc/rational.hpp"
#include "rhc/walk.hpp"

namespace rhc {

struct CascadeParams {
  int color_budget = 1;
  int witness_count = 1;
  int degree_floor = 1;
  int small_threshold = 1;
  int max_depth = 1;
  // Colours offered to each level. 1 gives one colour per level; larger pools
  // let each window pick any colour of its level's pool.
  int colors_per_level = 1;
  // Largest |W| extract_path accepts, and a bound on backtracking steps.
  std::size_t avoid_cap = static_cast<std::size_t>(-1);
  std::uint64_t step_limit = 2'000'000;

  static CascadeParams defaults(int k, int n, const Rational& gamma);
  // Asymptotic budgets and depth, with all three thresholds set to 1.
  static CascadeParams desk(int k, int n, const Rational& gamma);

  // Throws std::invalid_argument on thresholds < 1 or max_depth < k-1.
  void validate(int k) const;
};

// Edge of G_j from node `from` of A_{j-1} to node `to` of A_j. Each witness
// names the G_{j-1} edge (f, from) it extends together with the colour of the
// window prefix(f) + from + last(to); -1 stands for the root at level 1.
struct CascadeEdge {
  int from = 0;
  int to = 0;
  std::vector<std::pair<int, Color>> witnesses;
};

struct CascadeLevel {
  std::vector<Tuple> nodes;               // (k-2)-tuples
  std::vector<CascadeEdge> edges;         // empty at level 0
  std::vector<Color> colors;              // pool of this level
  std::vector<std::vector<int>> back;     // node -> incoming edge ids
};

class Cascade {
 public:
  // `excluded` vertices never join as suffix vertices. The root's vertices are
  // excluded automatically. Requires k >= 3.
  Cascade(const HypergraphSystem& system, Tuple e0, std::vector<Color> colors, CascadeParams params,
          std::vector<Vertex> excluded = {});

  // Builds the next level. Returns false, leaving the levels untouched, when
  // the depth cap or the colour list is exhausted; an empty level is kept and
  // recorded.
  bool grow();

  const Tuple& root() const { return e0_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const CascadeLevel& level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }
  const std::vector<CascadeLevel>& levels() const { return levels_; }
  std::vector<Color> level_colors() const;
  const CascadeParams& params() const { return params_; }
  int k() const { return k_; }

  std::optional<int> find_node(int j, const Tuple& node) const;
  int backward_degree(int j, int node) const;

  // First level that came out empty, or 0.
  int empty_level() const { return empty_level_; }
  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  const HypergraphSystem* system_;
  int k_;
  Tuple e0_;
  std::vector<Color> colors_;
  std::size_t next_color_ = 0;
  CascadeParams params_;
  std::vector<char> excluded_;
  std::vector<CascadeLevel> levels_;
  int empty_level_ = 0;
  bool budget_exhausted_ = false;
};

// Grows until `depth` levels exist (default params.max_depth), a level
// empties or the colours run out.
Cascade grow_cascade(const HypergraphSystem& system, const Tuple& e0, const std::vector<Color>& colors,
                     const CascadeParams& params, std::optional<int> depth = std::nullopt,
                     const std::vector<Vertex>& excluded = {});

struct ExtractResult {
  std::optional<TightWalk> path;
  std::string failure;
};

// Rainbow path on j+k-1 vertices from e0 to the ends of edge `edge` of G_j,
// avoiding W. Witnesses are tried by ascending prefix vertex.
ExtractResult extract_path(const Cascade& cascade, int j, int edge, const std::vector<Vertex>& avoid);

struct ConnectResult {
  std::optional<TightWalk> path;
  std::string failure;
  int meeting_level = 0;
  std::vector<std::size_t> level_sizes;  // e1-cascade |A_j|
  std::uint64_t explored = 0;             // fallback: sequences examined
};

// Rainbow tight path starting with e1 and ending with reverse(e2), using
// colours from `colors` and no vertex of `forbidden`. Throws on overlapping or
// malformed ends.
ConnectResult connect(const HypergraphSystem& system, const Tuple& e1, const Tuple& e2,
                      const std::vector<Color>& colors, const CascadeParams& params,
                      const std::vector<Vertex>& forbidden = {});

// Exact shortest connector with at most max_len vertices, by iterative
// deepening over vertex sequences and a window-to-colour matching per
// sequence. Returns no path when none exists or step_limit runs out (the
// failure text says which).
ConnectResult connect_bfs_fallback(const HypergraphSystem& system, const Tuple& e1, const Tuple& e2,
                                   const std::vector<Color>& colors, std::size_t max_len,
                                   const std::vector<Vertex>& forbidden = {},
                                   std::uint64_t step_limit = 5'000'000);

// Assigns distinct colours to windows: result[i] is the colour of window i,
// drawn from options[i]. Kuhn's augmenting paths.
std::optional<std::vector<Color>> match_windows(const std::vector<std::vector<Color>>& options);

} // namespace rhc
