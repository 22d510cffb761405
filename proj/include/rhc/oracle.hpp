#pragma once

#include <cstdint>
#include <optional>

#include "rhc/hypergraph.hpp"
#include "rhc/walk.hpp"

namespace rhc {

inline constexpr int kDefaultOracleCap = 11;

struct OracleResult {
  bool exists = false;
  std::optional<TightWalk> witness;
  std::uint64_t orderings_scanned = 0;  // complete orderings whose matching was tested
  double runtime_ms = 0;
};

// Exact decision of "admits a rainbow tight Hamilton cycle". Cyclic orderings
// are enumerated up to rotation and reflection (v_1 = 1, v_2 < v_n), windows
// without any colour are pruned as soon as they close, and each ordering is
// tested by a window-to-colour matching. Throws std::invalid_argument when
// m != n or n exceeds the cap.
OracleResult oracle_hamilton(const HypergraphSystem& system, int cap = kDefaultOracleCap);

} // namespace rhc
