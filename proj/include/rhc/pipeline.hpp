#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rhc/absorber.hpp"
#include "rhc/connector.hpp"
#include "rhc/hypergraph.hpp"
#include "rhc/path_cover.hpp"
#include "rhc/rational.hpp"
#include "rhc/walk.hpp"

namespace rhc {

// (3k-3)^{-6} 2^{1-2k} gamma^{4k-4}
Rational default_kappa(int k, const Rational& gamma);

// ceil(8k gamma^{-2}) - (2k-2)
int default_splice_budget(int k, const Rational& gamma);

struct PipelineParams {
  Rational gamma{1, 10};
  std::optional<Rational> kappa;   // default_kappa
  std::optional<Rational> zeta;    // default_zeta
  std::optional<int> splice_budget;
  bool desk = false;
  // Desk overrides: absolute family size and leftover cap. Without an
  // explicit family size desk mode tries 1, 2, ... absorbers.
  std::optional<int> absorbers;
  std::optional<std::size_t> leftover_cap;
  int attempts = 8;
  std::uint64_t assignment_step_limit = 2'000'000;

  Rational kappa_or_default(int k) const { return kappa.value_or(default_kappa(k, gamma)); }
  Rational zeta_or_default(int k) const { return zeta.value_or(default_zeta(k, gamma)); }
  int splice_budget_or_default(int k) const { return splice_budget.value_or(default_splice_budget(k, gamma)); }
  CascadeParams cascade(int k, int n) const {
    return desk ? CascadeParams::desk(k, n, gamma) : CascadeParams::defaults(k, n, gamma);
  }
};

struct ColorAccounting {
  std::size_t gadget_colors = 0;
  std::size_t splice_colors = 0;
  std::size_t path_colors = 0;
  std::size_t unused = 0;
  std::size_t total = 0;
  bool balanced() const { return gadget_colors + splice_colors + path_colors + unused == total; }
};

struct AbsorbingCycle {
  bool ok = false;
  bool degenerate = false;  // empty family
  TightWalk cycle;
  TightWalk partial;        // assembled so far when a splice fails
  AbsorberFamily family;
  std::size_t splice_colors = 0;
  std::size_t fallback_splices = 0;
  std::string failure;
};

// Connects the gadgets of the family end to end and closes the chain into a
// rainbow cycle. Splices use unused colours in ascending order and avoid every
// vertex already placed. The cascade connector is tried first, then the
// exact fallback; `fallback_first` swaps the order.
AbsorbingCycle connect_family(const HypergraphSystem& system, const AbsorberFamily& family,
                              const PipelineParams& params, bool fallback_first = false);

// Samples the family (desk mode: `count` random disjoint gadgets that absorb
// something) and connects it.
AbsorbingCycle build_absorbing_cycle(const HypergraphSystem& system, const PipelineParams& params, std::uint64_t seed,
                                     std::optional<int> count = std::nullopt);

// Picks `count` pairwise disjoint rainbow gadgets that absorb at least one
// target, by random growth. May return fewer.
AbsorberFamily random_gadgets(const HypergraphSystem& system, int count, std::uint64_t seed);

struct PipelineResult {
  bool success = false;
  std::optional<TightWalk> cycle;
  std::string stage;    // last stage reached or the failing stage
  std::string failure;
  TightWalk absorbing;  // A
  RainbowFamily cover;  // paths and leftover T before absorption
  ColorAccounting accounting;
  bool property_q = false;  // V(A') = V(A) ∪ T ∪ V(P), C(A) ⊆ C(A')
  int attempts = 0;
  int absorbers_used = 0;
  std::optional<bool> oracle_exists;  // filled by callers that ran the oracle
};

// Step 1 absorbing cycle, Step 2 cover of the rest, Step 3 absorption of the
// leftover vertices and the cover paths. Any cycle returned passes
// verify_hamilton. Requires m == n.
PipelineResult find_rainbow_hamilton(const HypergraphSystem& system, const PipelineParams& params, std::uint64_t seed);

} // namespace rhc
