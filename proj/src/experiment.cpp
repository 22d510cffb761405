#include "rhc/experiment.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "rhc/random.hpp"

namespace rhc {

namespace {

ExperimentRow run_trial(const ExperimentParams& params, std::size_t point, int trial) {
  ExperimentRow row;
  row.seed = derive_seed(params.seed, point, static_cast<std::uint64_t>(trial));
  row.n = params.n;
  row.k = params.k;
  row.kind = to_string(params.kind);
  row.param = params.sweep[point];
  const auto start = std::chrono::steady_clock::now();

  GenParams g;
  g.kind = params.kind;
  g.n = params.n;
  g.k = params.k;
  g.seed = row.seed;
  if (params.kind == GenKind::Subthreshold) g.delta_target = std::stoi(row.param);
  else if (params.kind != GenKind::Complete) g.p = parse_rational(row.param);

  std::optional<HypergraphSystem> sys;
  try {
    sys = generate(g);
  } catch (const std::runtime_error&) {
    return row;
  }
  const Rational gm = degree_report(*sys).gamma_max;
  row.gamma_num = numerator(gm);
  row.gamma_den = denominator(gm);

  if (params.run_oracle) {
    OracleResult o = oracle_hamilton(*sys, params.oracle_cap);
    row.oracle_exists = o.exists;
    row.orderings = o.orderings_scanned;
    if (o.witness) row.witness_len = o.witness->vertices.size();
  }
  if (params.run_pipeline) {
    PipelineResult r = find_rainbow_hamilton(*sys, params.pipeline, derive_seed(row.seed, 0x919));
    row.pipeline_success = r.success;
    if (r.cycle && row.witness_len == 0) row.witness_len = r.cycle->vertices.size();
  }
  if (params.timing)
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string flag(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "1" : "0";
}

} // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentParams& params) {
  if (params.trials < 1) throw std::invalid_argument("trials must be positive");
  if (params.sweep.empty()) throw std::invalid_argument("the sweep needs at least one value");
  if (params.run_oracle && params.n > params.oracle_cap) throw std::invalid_argument("n exceeds the oracle cap");
  for (const auto& s : params.sweep) {
    if (params.kind == GenKind::Subthreshold) {
      std::size_t used = 0;
      (void)std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument("subthreshold sweep values must be integers");
    } else {
      Rational p = parse_rational(s);
      if (p < 0 || p > 1) throw std::invalid_argument("sweep values must lie in [0, 1]");
    }
  }

  const std::size_t per = static_cast<std::size_t>(params.trials);
  const std::size_t total = params.sweep.size() * per;
  std::vector<ExperimentRow> rows(total);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < total; i += stride) rows[i] = run_trial(params, i / per, static_cast<int>(i % per));
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, params.jobs));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    std::ostringstream rt;
    rt << std::fixed << std::setprecision(3) << r.runtime_ms;
    out << r.seed << ',' << r.n << ',' << r.k << ',' << r.kind << ',' << r.param << ','
        << (r.gamma_num ? r.gamma_num->str() : "") << ',' << (r.gamma_den ? r.gamma_den->str() : "") << ','
        << flag(r.oracle_exists) << ',' << flag(r.pipeline_success) << ',' << r.witness_len << ',' << r.orderings
        << ',' << rt.str() << '\n';
  }
}

std::vector<SweepPoint> summarize(const std::vector<ExperimentRow>& rows) {
  std::vector<SweepPoint> out;
  for (const auto& r : rows) {
    if (out.empty() || out.back().param != r.param) out.push_back({r.param});
    auto& p = out.back();
    ++p.trials;
    if (r.gamma_num) ++p.generated;
    if (r.oracle_exists.value_or(false)) ++p.oracle_yes;
    if (r.pipeline_success.value_or(false)) {
      ++p.pipeline_yes;
      if (r.oracle_exists && !*r.oracle_exists) ++p.unsound;
    }
  }
  return out;
}

} // namespace rhc
