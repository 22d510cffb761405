#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhc/hypergraph.hpp"

namespace rhc {

// A tight path or cycle together with its colour pattern. Colour i governs the
// window (v_i, ..., v_{i+k-1}); for cycles indices wrap modulo t.
struct TightWalk {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;
  bool is_cycle = false;

  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const TightWalk&, const TightWalk&) = default;
};

// Expected colour count for a walk on t vertices.
std::size_t window_count(std::size_t t, int k, bool is_cycle);

// Throws std::invalid_argument unless vertices are distinct and the colour
// sequence has the length the walk shape requires.
void validate_structure(const TightWalk& w, int k);

struct WalkVerdict {
  bool tight_ok = true;
  bool rainbow_ok = true;
  // Index of the first window that is not an edge of its colour, if any.
  std::optional<std::size_t> bad_window;
  // First colour that repeats, if any.
  std::optional<Color> repeated_color;

  bool ok() const { return tight_ok && rainbow_ok; }
};

WalkVerdict verify_walk(const HypergraphSystem& system, const TightWalk& w);

// The window starting at position i (cyclic for cycles).
std::vector<Vertex> window(const TightWalk& w, int k, std::size_t i);

using Ends = std::pair<Tuple, Tuple>;

// ((v_1..v_{k-1}), (v_t, ..., v_{t-k+2})): the second end is read inward.
Ends ends(const TightWalk& path, int k);

TightWalk reverse(const TightWalk& w, int k);

// Rotates a cycle so that position `shift` becomes position 0.
TightWalk rotate(const TightWalk& cycle, std::size_t shift);

// w1 followed by w2 where the last `overlap` vertices of w1 are the first
// `overlap` vertices of w2. Windows spanning the junction that lie in neither
// walk take their colours from `junction_colors`, in order. Windows lying in
// both must agree on colour.
TightWalk concat(const TightWalk& w1, const TightWalk& w2, int k, std::size_t overlap,
                 const std::vector<Color>& junction_colors = {});

// Number of junction windows concat needs for these sizes.
std::size_t junction_window_count(std::size_t t1, std::size_t t2, int k, std::size_t overlap);

// Closes `path` into a cycle with `closing`, a path that starts with the last
// k-1 vertices of `path` and ends with its first k-1 vertices.
TightWalk join_cycle(const TightWalk& path, const TightWalk& closing, int k);

// Rainbow tight Hamilton cycle: a permutation of [1, n], every cyclic window
// an edge in its colour, colours pairwise distinct.
bool verify_hamilton(const HypergraphSystem& system, const TightWalk& cycle);

struct FamilyVerdict {
  bool ok = true;
  std::string failure;
};

// Paths are each rainbow tight paths, pairwise vertex- and colour-disjoint.
FamilyVerdict check_rainbow_family(const HypergraphSystem& system, const std::vector<TightWalk>& paths);

// One-line form: "P|C <t> v1 .. vt ; c1 .. cL".
std::string serialize_walk(const TightWalk& w);
TightWalk parse_walk(std::string_view text);

} // namespace rhc
