#include "rhc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rhc/absorber.hpp"
#include "rhc/connector.hpp"
#include "rhc/experiment.hpp"
#include "rhc/generate.hpp"
#include "rhc/io.hpp"
#include "rhc/oracle.hpp"
#include "rhc/path_cover.hpp"
#include "rhc/pipeline.hpp"
#include "rhc/walk.hpp"

namespace rhc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HypergraphSystem load(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw UsageError("cannot open '" + path + "'");
  return read_rhg_file(path);
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("'" + text + "' is not a comma-separated integer list");
    }
    if (used != item.size()) throw std::invalid_argument("'" + text + "' is not a comma-separated integer list");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Rational positive(const std::string& text, const char* name) {
  Rational r = parse_rational(text);
  if (r <= 0) throw std::invalid_argument(std::string(name) + " must be positive");
  return r;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string gadget_line(const std::vector<Vertex>& v, const std::vector<Color>& c) {
  std::ostringstream s;
  s << "A";
  for (Vertex x : v) s << ' ' << x;
  s << " ;";
  for (Color x : c) s << ' ' << x;
  return s.str();
}

struct GenOpts {
  std::string kind = "complete";
  int n = 0, k = 3, m = 0;
  std::string p = "1";
  int delta = -1;
  std::uint64_t seed = 0;
  std::string output;
};

int run_gen(const GenOpts& o, std::ostream& out) {
  auto kind = parse_kind(o.kind);
  if (!kind) throw std::invalid_argument("unknown kind '" + o.kind + "'");
  GenParams g;
  g.kind = *kind;
  g.n = o.n;
  g.k = o.k;
  if (o.m > 0) g.m = o.m;
  g.p = parse_rational(o.p);
  if (o.delta >= 0) g.delta_target = o.delta;
  g.seed = o.seed;
  HypergraphSystem sys = generate(g);
  if (o.output.empty()) {
    write_rhg(out, sys);
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.output + "'");
    write_rhg(f, sys);
  }
  return kExitOk;
}

struct CheckOpts {
  std::string file;
  std::string walk;
  std::string gamma;
};

int run_check(const CheckOpts& o, std::ostream& out) {
  HypergraphSystem sys = load(o.file);
  DegreeReport d = degree_report(sys);
  out << "k=" << sys.k() << " n=" << sys.n() << " m=" << sys.m() << " edges=" << sys.total_edges() << '\n';
  out << "min_codegree=";
  for (std::size_t i = 0; i < d.per_color.size(); ++i) out << (i ? "," : "") << d.per_color[i];
  out << '\n' << "global_min=" << d.global_min << " gamma_max=" << to_string(d.gamma_max) << '\n';
  if (!o.gamma.empty()) out << "gamma_condition=" << yes(satisfies_gamma(sys, parse_rational(o.gamma))) << '\n';
  if (o.walk.empty()) return kExitOk;
  TightWalk w = parse_walk(o.walk);
  validate_structure(w, sys.k());
  WalkVerdict v = verify_walk(sys, w);
  out << "walk tight=" << yes(v.tight_ok) << " rainbow=" << yes(v.rainbow_ok);
  if (v.bad_window) out << " bad_window=" << *v.bad_window;
  if (v.repeated_color) out << " repeated_color=" << *v.repeated_color;
  bool ok = v.ok();
  if (w.is_cycle) {
    const bool h = verify_hamilton(sys, w);
    out << " hamilton=" << yes(h);
  }
  out << '\n';
  return ok ? kExitOk : kExitNegative;
}

struct ConnectOpts {
  std::string file, e1, e2, colors, gamma = "0.1";
  bool desk = false, fallback = false;
  int max_len = 0;
};

int run_connect(const ConnectOpts& o, std::ostream& out) {
  HypergraphSystem sys = load(o.file);
  const Rational gamma = positive(o.gamma, "gamma");
  Tuple e1 = int_list(o.e1), e2 = int_list(o.e2);
  std::vector<Color> colors = int_list(o.colors);
  CascadeParams p = o.desk ? CascadeParams::desk(sys.k(), sys.n(), gamma) : CascadeParams::defaults(sys.k(), sys.n(), gamma);
  ConnectResult r = connect(sys, e1, e2, colors, p);
  out << "levels=";
  for (std::size_t i = 0; i < r.level_sizes.size(); ++i) out << (i ? "," : "") << r.level_sizes[i];
  out << '\n';
  std::string method = "cascade";
  if (!r.path) {
    out << "cascade_failure=" << r.failure << '\n';
    if (o.fallback) {
      const std::size_t max_len = o.max_len > 0 ? static_cast<std::size_t>(o.max_len)
                                                : static_cast<std::size_t>(p.color_budget + sys.k() - 1);
      r = connect_bfs_fallback(sys, e1, e2, colors, max_len);
      method = "fallback";
    }
  }
  if (!r.path) {
    out << "result=none method=" << method << " reason=" << r.failure << '\n';
    return kExitNegative;
  }
  out << serialize_walk(*r.path) << '\n';
  out << "result=found method=" << method << " vertices=" << r.path->vertices.size();
  if (method == "cascade") out << " meeting_level=" << r.meeting_level;
  out << '\n';
  return kExitOk;
}

struct AbsorberOpts {
  std::string file, target, zeta = "0.1";
  bool sample = false, count_only = false;
  long long limit = 20;
  std::uint64_t seed = 0;
};

int run_absorbers(const AbsorberOpts& o, std::ostream& out) {
  HypergraphSystem sys = load(o.file);
  if (o.sample) {
    SampleResult s = sample_family(sys, parse_rational(o.zeta), o.seed);
    out << "p=" << to_string(s.stats.probability) << " population=" << s.stats.population.str()
        << " expected=" << to_string(s.stats.expected_size) << " sampled=" << s.stats.sampled
        << " after_intersections=" << s.stats.after_intersections << " after_filter=" << s.stats.after_filter
        << " expected_below_one=" << yes(s.stats.expected_below_one) << '\n';
    for (const auto& g : s.family.members()) out << gadget_line(g.vertices, g.colors) << '\n';
    return kExitOk;
  }
  if (o.target.empty()) throw std::invalid_argument("give --target or --sample");
  AbsorberTarget target;
  if (o.target.rfind("x:", 0) == 0) {
    auto xc = int_list(o.target.substr(2));
    if (xc.size() != 2) throw std::invalid_argument("x: target takes <v>,<c>");
    target = VertexTarget{xc[0], xc[1]};
  } else if (o.target.rfind("ends:", 0) == 0) {
    auto parts = split(o.target.substr(5), ';');
    if (parts.size() != 3) throw std::invalid_argument("ends: target takes <u...>;<v...>;<o...>");
    target = EndsTarget{int_list(parts[0]), int_list(parts[1]), int_list(parts[2])};
  } else {
    throw std::invalid_argument("--target must start with x: or ends:");
  }
  validate_target(sys, target);
  if (o.limit < 0) throw std::invalid_argument("--limit must be non-negative");
  std::uint64_t shown = 0;
  const std::uint64_t total = for_each_absorber(sys, target, [&](const AbsorberRecord& r) {
    if (!o.count_only && shown < static_cast<std::uint64_t>(o.limit)) {
      out << gadget_line(r.vertices, r.colors) << '\n';
      ++shown;
    }
    return true;
  });
  out << "count=" << total << '\n';
  return total > 0 ? kExitOk : kExitNegative;
}

struct CoverOpts {
  std::string file, mode = "greedy", delta = "0.1", epsilon = "0.05", gamma = "0.1";
  int t0 = 6, q = 3, trials = 20, min_len = 0;
  std::uint64_t seed = 0;
};

int run_cover(const CoverOpts& o, std::ostream& out) {
  HypergraphSystem sys = load(o.file);
  const Rational delta = parse_rational(o.delta);
  if (delta < 0 || delta > 1) throw std::invalid_argument("--delta must lie in [0, 1]");
  RainbowFamily fam;
  std::string extra;
  if (o.mode == "greedy") {
    const std::size_t min_len = o.min_len > 0 ? static_cast<std::size_t>(o.min_len) : static_cast<std::size_t>(sys.k());
    fam = greedy_path_cover(sys, delta, min_len, o.seed);
  } else if (o.mode == "embed") {
    EmbedParams p;
    p.epsilon = positive(o.epsilon, "epsilon");
    p.gamma = positive(o.gamma, "gamma");
    p.delta = delta;
    p.t0 = o.t0;
    p.q = o.q;
    p.trials = o.trials;
    EmbedReport r = embed_path_cover(sys, p, o.seed);
    fam = r.family;
    std::ostringstream s;
    s << "cluster_edges=" << r.cluster_edges << " v0=" << r.v0_vertices << " accounting=" << yes(r.accounting_ok);
    if (!r.stage_failure.empty()) s << " stage_failure=\"" << r.stage_failure << '"';
    extra = s.str();
  } else {
    throw std::invalid_argument("--mode must be embed or greedy");
  }
  FamilyVerdict v = check_rainbow_family(sys, fam.paths);
  if (!v.ok) throw std::logic_error("cover produced an invalid family: " + v.failure);
  for (const auto& p : fam.paths) out << serialize_walk(p) << '\n';
  if (!extra.empty()) out << extra << '\n';
  const std::size_t covered = static_cast<std::size_t>(sys.n()) - fam.uncovered.size();
  const bool within = Rational(static_cast<long long>(fam.uncovered.size())) <= delta * sys.n();
  out << "mode,n,paths,covered,uncovered,within_delta\n";
  out << o.mode << ',' << sys.n() << ',' << fam.paths.size() << ',' << covered << ',' << fam.uncovered.size() << ','
      << (within ? 1 : 0) << '\n';
  return kExitOk;
}

struct HamiltonOpts {
  std::string file, method = "pipeline", gamma = "0.1";
  std::uint64_t seed = 0;
  bool desk = false;
  int absorbers = 0, cap = kDefaultOracleCap, leftover_cap = -1;
};

int run_hamilton(const HamiltonOpts& o, std::ostream& out) {
  if (o.method != "pipeline" && o.method != "oracle" && o.method != "both")
    throw std::invalid_argument("--method must be pipeline, oracle or both");
  HypergraphSystem sys = load(o.file);
  if (sys.m() != sys.n()) throw std::invalid_argument("a rainbow Hamilton cycle needs m == n");
  std::optional<OracleResult> oracle;
  if (o.method != "pipeline") {
    oracle = oracle_hamilton(sys, o.cap);
    if (oracle->witness) out << serialize_walk(*oracle->witness) << '\n';
    out << (oracle->exists ? "exists" : "not exists") << '\n';
    out << "method=oracle exists=" << (oracle->exists ? 1 : 0) << " orderings=" << oracle->orderings_scanned << '\n';
  }
  std::optional<PipelineResult> pipe;
  if (o.method != "oracle") {
    PipelineParams p;
    p.gamma = positive(o.gamma, "gamma");
    p.desk = o.desk;
    if (o.absorbers > 0) p.absorbers = o.absorbers;
    if (o.leftover_cap >= 0) p.leftover_cap = static_cast<std::size_t>(o.leftover_cap);
    pipe = find_rainbow_hamilton(sys, p, o.seed);
    if (oracle) pipe->oracle_exists = oracle->exists;
    if (pipe->success && pipe->cycle) out << serialize_walk(*pipe->cycle) << '\n';
    out << "method=pipeline success=" << (pipe->success ? 1 : 0) << " stage=" << pipe->stage
        << " attempts=" << pipe->attempts << " absorbers=" << pipe->absorbers_used
        << " absorbing_len=" << pipe->absorbing.vertices.size() << " cover_paths=" << pipe->cover.paths.size()
        << " leftover=" << pipe->cover.uncovered.size() << " property_q=" << (pipe->property_q ? 1 : 0);
    if (!pipe->failure.empty()) out << " failure=\"" << pipe->failure << '"';
    if (pipe->oracle_exists) out << " oracle_disagrees=" << ((*pipe->oracle_exists != pipe->success) ? 1 : 0);
    out << '\n';
    if (pipe->success && oracle && !oracle->exists) throw std::logic_error("pipeline cycle contradicts the oracle");
  }
  const bool found = (oracle && oracle->exists) || (pipe && pipe->success);
  return found ? kExitOk : kExitNegative;
}

struct ExperimentOpts {
  int n = 8, k = 3, trials = 50, cap = kDefaultOracleCap, jobs = 1;
  std::string kind = "random", sweep = "0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0", output, gamma = "0.1";
  std::uint64_t seed = 1;
  bool no_oracle = false, no_pipeline = false, timing = false, summary = false;
};

int run_experiment_cmd(const ExperimentOpts& o, std::ostream& out, std::ostream& err) {
  auto kind = parse_kind(o.kind);
  if (!kind) throw std::invalid_argument("unknown kind '" + o.kind + "'");
  ExperimentParams p;
  p.n = o.n;
  p.k = o.k;
  p.kind = *kind;
  p.sweep = split(o.sweep, ',');
  p.trials = o.trials;
  p.seed = o.seed;
  p.run_oracle = !o.no_oracle;
  p.run_pipeline = !o.no_pipeline;
  p.timing = o.timing;
  p.oracle_cap = o.cap;
  p.jobs = o.jobs;
  p.pipeline.desk = true;
  p.pipeline.gamma = positive(o.gamma, "gamma");
  auto rows = run_experiment(p);
  if (o.output.empty()) {
    write_csv(out, rows);
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.output + "'");
    write_csv(f, rows);
  }
  if (o.summary)
    for (const auto& s : summarize(rows))
      err << "param=" << s.param << " trials=" << s.trials << " oracle_yes=" << s.oracle_yes
          << " pipeline_yes=" << s.pipeline_yes << " unsound=" << s.unsound << '\n';
  return kExitOk;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow tight Hamilton cycles in k-graph systems", "rhc"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "Generate an instance in RHG format");
  g->add_option("--kind", gen.kind, "complete | random | identical | subthreshold")->capture_default_str();
  g->add_option("--n", gen.n, "Vertices")->required();
  g->add_option("--k", gen.k, "Uniformity")->capture_default_str();
  g->add_option("--m", gen.m, "Colours (default n)");
  g->add_option("--p", gen.p, "Edge probability")->capture_default_str();
  g->add_option("--delta", gen.delta, "Codegree target");
  g->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CheckOpts check;
  auto* c = app.add_subcommand("check", "Degree report; optionally verify a serialized walk");
  c->add_option("file", check.file)->required();
  c->add_option("--walk", check.walk, "Walk in serialized form");
  c->add_option("--gamma", check.gamma, "Report whether every colour has codegree >= (1/2+gamma)n");

  ConnectOpts con;
  auto* cn = app.add_subcommand("connect", "Connect two disjoint (k-1)-tuples by a rainbow path");
  cn->add_option("file", con.file)->required();
  cn->add_option("--e1", con.e1)->required();
  cn->add_option("--e2", con.e2)->required();
  cn->add_option("--colors", con.colors)->required();
  cn->add_option("--gamma", con.gamma)->capture_default_str();
  cn->add_option("--max-len", con.max_len, "Fallback length cap");
  cn->add_flag("--desk", con.desk, "Thresholds m, degree floor and small-node cutoff set to 1");
  cn->add_flag("--fallback", con.fallback, "Run the exact search if the cascade fails");

  AbsorberOpts ab;
  auto* a = app.add_subcommand("absorbers", "Enumerate absorbers of a target or sample a family");
  a->add_option("file", ab.file)->required();
  a->add_option("--target", ab.target, "x:<v>,<c> or ends:<u...>;<v...>;<o...>");
  a->add_option("--limit", ab.limit, "Records to print")->capture_default_str();
  a->add_flag("--count", ab.count_only, "Print only the count");
  a->add_flag("--sample", ab.sample, "Sample a random family");
  a->add_option("--zeta", ab.zeta)->capture_default_str();
  a->add_option("--seed", ab.seed)->capture_default_str();

  CoverOpts cov;
  auto* cv = app.add_subcommand("cover", "Cover most vertices by disjoint rainbow paths");
  cv->add_option("file", cov.file)->required();
  cv->add_option("--mode", cov.mode, "embed | greedy")->capture_default_str();
  cv->add_option("--delta", cov.delta)->capture_default_str();
  cv->add_option("--epsilon", cov.epsilon)->capture_default_str();
  cv->add_option("--gamma", cov.gamma)->capture_default_str();
  cv->add_option("--t0", cov.t0)->capture_default_str();
  cv->add_option("--Q", cov.q)->capture_default_str();
  cv->add_option("--trials", cov.trials)->capture_default_str();
  cv->add_option("--min-len", cov.min_len, "Greedy: shortest path kept (default k)");
  cv->add_option("--seed", cov.seed)->capture_default_str();

  HamiltonOpts ham;
  auto* h = app.add_subcommand("hamilton", "Find a rainbow tight Hamilton cycle");
  h->add_option("file", ham.file)->required();
  h->add_option("--method", ham.method, "pipeline | oracle | both")->capture_default_str();
  h->add_option("--seed", ham.seed)->capture_default_str();
  h->add_option("--gamma", ham.gamma)->capture_default_str();
  h->add_flag("--desk", ham.desk, "Desk-scale thresholds and absolute family size");
  h->add_option("--absorbers", ham.absorbers, "Absorbing family size");
  h->add_option("--leftover-cap", ham.leftover_cap, "Vertices the cover may leave");
  h->add_option("--cap", ham.cap, "Largest n the oracle accepts")->capture_default_str();

  ExperimentOpts ex;
  auto* e = app.add_subcommand("experiment", "Threshold sweep as CSV");
  e->add_option("--n", ex.n)->capture_default_str();
  e->add_option("--k", ex.k)->capture_default_str();
  e->add_option("--kind", ex.kind)->capture_default_str();
  e->add_option("--sweep", ex.sweep, "Comma-separated p (or delta targets)")->capture_default_str();
  e->add_option("--trials", ex.trials)->capture_default_str();
  e->add_option("--seed", ex.seed)->capture_default_str();
  e->add_option("--gamma", ex.gamma)->capture_default_str();
  e->add_option("--cap", ex.cap)->capture_default_str();
  e->add_option("--jobs", ex.jobs)->capture_default_str();
  e->add_option("-o,--output", ex.output);
  e->add_flag("--no-oracle", ex.no_oracle);
  e->add_flag("--no-pipeline", ex.no_pipeline);
  e->add_flag("--timing", ex.timing, "Record wall-clock runtimes (output no longer byte-stable)");
  e->add_flag("--summary", ex.summary, "Per-point rates on stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex_) {
    err << "rhc: " << ex_.what() << '\n';
    return kExitUsage;
  }

  try {
    if (g->parsed()) return run_gen(gen, out);
    if (c->parsed()) return run_check(check, out);
    if (cn->parsed()) return run_connect(con, out);
    if (a->parsed()) return run_absorbers(ab, out);
    if (cv->parsed()) return run_cover(cov, out);
    if (h->parsed()) return run_hamilton(ham, out);
    if (e->parsed()) return run_experiment_cmd(ex, out, err);
  } catch (const ParseError& pe) {
    const std::string file = !check.file.empty() ? check.file
                             : !con.file.empty() ? con.file
                             : !ab.file.empty()  ? ab.file
                             : !cov.file.empty() ? cov.file
                                                 : ham.file;
    err << "rhc: " << file << ':' << pe.line() << ':' << pe.column() << ": " << pe.message() << '\n';
    return kExitUsage;
  } catch (const UsageError& ue) {
    err << "rhc: " << ue.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ia) {
    err << "rhc: " << ia.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& oor) {
    err << "rhc: " << oor.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ie) {
    err << "rhc: " << ie.what() << '\n';
    return kExitInternal;
  }
  err << "rhc: no command\n";
  return kExitUsage;
}

} // namespace rhc
