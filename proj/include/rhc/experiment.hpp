#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rhc/generate.hpp"
#include "rhc/oracle.hpp"
#include "rhc/pipeline.hpp"
#include "rhc/rational.hpp"

namespace rhc {

inline constexpr const char* kCsvHeader =
    "seed,n,k,kind,param,gamma_max_num,gamma_max_den,oracle_exists,pipeline_success,witness_len,orderings,runtime_ms";

struct ExperimentParams {
  int n = 8;
  int k = 3;
  GenKind kind = GenKind::Random;
  // Sweep values as typed: p for random/identical, the δ target for
  // subthreshold, ignored for complete.
  std::vector<std::string> sweep;
  int trials = 50;
  std::uint64_t seed = 1;
  bool run_oracle = true;
  bool run_pipeline = true;
  bool timing = false;
  int oracle_cap = kDefaultOracleCap;
  int jobs = 1;
  PipelineParams pipeline;
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  int n = 0;
  int k = 0;
  std::string kind;
  std::string param;
  std::optional<BigInt> gamma_num;
  std::optional<BigInt> gamma_den;
  std::optional<bool> oracle_exists;
  std::optional<bool> pipeline_success;
  std::size_t witness_len = 0;
  std::uint64_t orderings = 0;
  double runtime_ms = 0;  // 0 unless timing was requested
};

// Rows in sweep order, trials in order; trial t of point i uses seed
// derive_seed(seed, i, t). Deterministic for any job count.
std::vector<ExperimentRow> run_experiment(const ExperimentParams& params);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

struct SweepPoint {
  std::string param;
  int trials = 0;
  int generated = 0;
  int oracle_yes = 0;
  int pipeline_yes = 0;
  // Pipeline successes on instances where the oracle said no.
  int unsound = 0;
};

std::vector<SweepPoint> summarize(const std::vector<ExperimentRow>& rows);

} // namespace rhc
