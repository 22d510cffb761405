#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rhc/hypergraph.hpp"
#include "rhc/rational.hpp"

namespace rhc {

enum class GenKind { Complete, Random, Identical, Subthreshold };

std::optional<GenKind> parse_kind(std::string_view name);
std::string to_string(GenKind kind);

struct GenParams {
  GenKind kind = GenKind::Complete;
  int n = 0;
  int k = 3;
  std::optional<int> m;             // default n
  Rational p = 1;                   // random and identical
  std::optional<int> delta_target;  // random: lower bound on δ; subthreshold: exact δ
  std::uint64_t seed = 0;
  int retries = 200;
};

// Random edges are decided by a counter-based hash of (seed, colour, colex
// rank), so the result does not depend on generation order. Subthreshold
// systems start from a parity construction over a random bipartition and add
// random edges until every colour has δ_{k-1} equal to the target; whether they
// are Hamiltonian is left to the oracle. Throws std::runtime_error when the
// target is not reached within the retry budget.
HypergraphSystem generate(const GenParams& params);

// ⌊(n - k + 3) / 2⌋
int conjectured_threshold(int n, int k);

} // namespace rhc
