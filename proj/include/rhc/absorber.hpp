#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rhc/hypergraph.hpp"
#include "rhc/rational.hpp"
#include "rhc/walk.hpp"

namespace rhc {

struct VertexTarget {
  Vertex x = 0;
  Color c = 0;
  friend auto operator<=>(const VertexTarget&, const VertexTarget&) = default;
};

// Splices a path that starts with u_1..u_{k-1} and ends with v_1..v_{k-1};
// o colours the k-1 windows that re-enter the gadget after v.
struct EndsTarget {
  Tuple u;
  Tuple v;
  std::vector<Color> o;
  friend auto operator<=>(const EndsTarget&, const EndsTarget&) = default;
};

using AbsorberTarget = std::variant<VertexTarget, EndsTarget>;

// The (3k-3)-tuple x_1..x_{2k-2}, c_1..c_{k-1}: a rainbow tight path with
// colour pattern c.
struct Gadget {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  TightWalk walk() const { return {vertices, colors, false}; }
  friend auto operator<=>(const Gadget&, const Gadget&) = default;
};

struct AbsorberRecord {
  std::vector<Vertex> vertices;  // 2k-2
  std::vector<Color> colors;     // k-1
  AbsorberTarget target;

  Gadget gadget() const { return {vertices, colors}; }
};

// Throws std::invalid_argument / std::out_of_range for malformed targets,
// including ends targets whose u and v share a vertex.
void validate_target(const HypergraphSystem& system, const AbsorberTarget& target);

bool is_rainbow_gadget(const HypergraphSystem& system, const Gadget& g);

// Full definitional check. For ends targets the gadget colours must also avoid
// o, since both appear in the rerouted cycle.
bool is_absorber(const HypergraphSystem& system, const AbsorberRecord& rec);

// Visits absorbers for `target` in construction order: colour pattern first,
// then the vertices in the order the counting argument chooses them. Stops
// when `visit` returns false. Returns the number visited.
std::uint64_t for_each_absorber(const HypergraphSystem& system, const AbsorberTarget& target,
                                const std::function<bool(const AbsorberRecord&)>& visit);

std::vector<AbsorberRecord> enumerate_absorbers(const HypergraphSystem& system, const AbsorberTarget& target,
                                                std::optional<std::uint64_t> limit = std::nullopt);

std::uint64_t count_absorbers(const HypergraphSystem& system, const AbsorberTarget& target);

// 2^{2-k} gamma^k n^{3k-3} for vertex targets, 2^{1-k} gamma^{2k-2} n^{3k-3}
// for ends targets.
Rational absorber_lower_bound(int k, int n, const Rational& gamma, bool vertex_target);

// Exact count over the lower bound. Diagnostic only.
Rational absorber_count_ratio(const HypergraphSystem& system, const AbsorberTarget& target, const Rational& gamma);

// 2^{1-k} gamma^{2k-2}
Rational default_zeta(int k, const Rational& gamma);

// Two gadgets intersect when they share a vertex or a colour.
bool intersecting(const Gadget& a, const Gadget& b);

// Whether the gadget absorbs at least one vertex or ends target.
bool absorbs_some_target(const HypergraphSystem& system, const Gadget& g);

class AbsorberFamily {
 public:
  AbsorberFamily() = default;
  explicit AbsorberFamily(std::vector<Gadget> members) : members_(std::move(members)) {}

  const std::vector<Gadget>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // Positions of members that absorb the target, ascending. Vertex targets are
  // served from an index built by build_index.
  std::vector<std::size_t> lookup(const HypergraphSystem& system, const AbsorberTarget& target) const;
  void build_index(const HypergraphSystem& system);

  // Members pairwise non-intersecting and each a rainbow gadget.
  bool well_formed(const HypergraphSystem& system) const;

 private:
  std::vector<Gadget> members_;
  std::map<VertexTarget, std::vector<std::size_t>> vertex_index_;
  bool indexed_ = false;
};

struct SampleStats {
  Rational probability;           // per-tuple inclusion probability p
  BigInt population;              // number of (3k-3)-tuples
  Rational expected_size;         // p * population == (3k-3)^{-4} zeta n
  std::uint64_t sampled = 0;      // |F|
  std::uint64_t after_intersections = 0;
  std::uint64_t after_filter = 0;  // |F'|
  bool expected_below_one = false;
};

struct SampleResult {
  AbsorberFamily family;
  SampleStats stats;
};

// Random family selection: include each tuple independently with probability
// p, drop the lexicographically later tuple of every intersecting pair, then
// drop tuples that absorb nothing.
SampleResult sample_family(const HypergraphSystem& system, const Rational& zeta, std::uint64_t seed);

// Inserts x between x_{k-1} and x_k of a gadget that sits contiguously in the
// walk with its pattern. Colour c joins the walk.
TightWalk absorb_vertex(const HypergraphSystem& system, const TightWalk& walk, const AbsorberRecord& rec);

// Reroutes the walk through x_1..x_{k-1}, then path, then x_k..x_{2k-2}. The
// path must start with u and end with v; o colours the re-entry windows.
TightWalk absorb_path(const HypergraphSystem& system, const TightWalk& walk, const AbsorberRecord& rec,
                      const TightWalk& path);

// Position of the gadget's x_1 if the gadget occurs contiguously with its
// pattern in the walk.
std::optional<std::size_t> locate_gadget(const TightWalk& walk, const Gadget& g, int k);

} // namespace rhc
