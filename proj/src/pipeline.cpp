#include "rhc/pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rhc/random.hpp"

namespace rhc {

Rational default_kappa(int k, const Rational& gamma) {
  return pow(Rational(3 * k - 3), -6) * pow(Rational(2), 1 - 2 * k) * pow(gamma, 4 * k - 4);
}

int default_splice_budget(int k, const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  return static_cast<int>(to_int64(ceil(8 * k / (gamma * gamma)))) - (2 * k - 2);
}

AbsorberFamily random_gadgets(const HypergraphSystem& system, int count, std::uint64_t seed) {
  const int k = system.k(), n = system.n(), m = system.m();
  Rng rng(derive_seed(seed, 0x9ad));
  std::vector<char> used_v(static_cast<std::size_t>(n) + 1, 0), used_c(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Gadget> chosen;
  const std::size_t len = static_cast<std::size_t>(2 * k - 2);
  for (int tries = 0; static_cast<int>(chosen.size()) < count && tries < 200 * std::max(count, 1); ++tries) {
    std::vector<Color> colors;
    for (Color c = 1; c <= m; ++c)
      if (!used_c[static_cast<std::size_t>(c)]) colors.push_back(c);
    if (colors.empty()) break;
    const Color c0 = colors[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(colors.size()) - 1))];
    std::vector<const Tuple*> usable;
    for (const auto& e : system.graph(c0).edges())
      if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return used_v[static_cast<std::size_t>(v)] != 0; }))
        usable.push_back(&e);
    if (usable.empty()) continue;
    Gadget g;
    g.vertices = *usable[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(usable.size()) - 1))];
    shuffle(g.vertices, rng);
    g.colors.push_back(c0);
    while (g.vertices.size() < len) {
      Tuple s(g.vertices.end() - (k - 1), g.vertices.end());
      std::vector<std::pair<Vertex, Color>> cands;
      for (Color c : colors) {
        if (std::find(g.colors.begin(), g.colors.end(), c) != g.colors.end()) continue;
        for (Vertex u : system.graph(c).neighbors(s))
          if (!used_v[static_cast<std::size_t>(u)] && std::find(g.vertices.begin(), g.vertices.end(), u) == g.vertices.end())
            cands.emplace_back(u, c);
      }
      if (cands.empty()) break;
      auto [u, c] = cands[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(cands.size()) - 1))];
      g.vertices.push_back(u);
      g.colors.push_back(c);
    }
    if (g.vertices.size() != len || !absorbs_some_target(system, g)) continue;
    for (Vertex v : g.vertices) used_v[static_cast<std::size_t>(v)] = 1;
    for (Color c : g.colors) used_c[static_cast<std::size_t>(c)] = 1;
    chosen.push_back(std::move(g));
  }
  return AbsorberFamily(std::move(chosen));
}

namespace {

Tuple head(const TightWalk& w, int k) { return Tuple(w.vertices.begin(), w.vertices.begin() + (k - 1)); }
Tuple tail(const TightWalk& w, int k) { return Tuple(w.vertices.end() - (k - 1), w.vertices.end()); }

} // namespace

AbsorbingCycle connect_family(const HypergraphSystem& system, const AbsorberFamily& family,
                              const PipelineParams& params, bool fallback_first) {
  const int k = system.k(), n = system.n(), m = system.m();
  AbsorbingCycle out;
  out.family = family;
  if (family.empty()) {
    out.degenerate = true;
    out.failure = "absorber family is empty";
    return out;
  }
  if (!family.well_formed(system)) throw std::invalid_argument("family members must be disjoint rainbow gadgets");

  std::vector<char> used_v(static_cast<std::size_t>(n) + 1, 0), used_c(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& g : family.members()) {
    for (Vertex v : g.vertices) used_v[static_cast<std::size_t>(v)] = 1;
    for (Color c : g.colors) used_c[static_cast<std::size_t>(c)] = 1;
  }
  const int budget = params.splice_budget_or_default(k);
  const std::size_t max_len = static_cast<std::size_t>(budget + 2 * (k - 1));
  const CascadeParams cparams = params.cascade(k, n);

  auto splice = [&](const Tuple& e1, const Tuple& e2) -> std::optional<TightWalk> {
    std::vector<Color> colors;
    for (Color c = 1; c <= m; ++c)
      if (!used_c[static_cast<std::size_t>(c)]) colors.push_back(c);
    std::vector<Vertex> forbidden;
    for (Vertex v = 1; v <= n; ++v)
      if (used_v[static_cast<std::size_t>(v)] && std::find(e1.begin(), e1.end(), v) == e1.end() &&
          std::find(e2.begin(), e2.end(), v) == e2.end())
        forbidden.push_back(v);
    auto cascade = [&]() -> std::optional<TightWalk> {
      if (k < 3) return std::nullopt;
      auto r = connect(system, e1, e2, colors, cparams, forbidden);
      if (!r.path || r.path->vertices.size() > max_len) return std::nullopt;
      return r.path;
    };
    auto exact = [&]() -> std::optional<TightWalk> {
      auto r = connect_bfs_fallback(system, e1, e2, colors, max_len, forbidden);
      if (r.path) ++out.fallback_splices;
      return r.path;
    };
    auto p = fallback_first ? exact() : cascade();
    if (!p) p = fallback_first ? cascade() : exact();
    if (!p) return std::nullopt;
    for (Vertex v : p->vertices) used_v[static_cast<std::size_t>(v)] = 1;
    for (Color c : p->colors) used_c[static_cast<std::size_t>(c)] = 1;
    out.splice_colors += p->colors.size();
    return p;
  };

  const auto& members = family.members();
  TightWalk chain = members.front().walk();
  for (std::size_t i = 1; i < members.size(); ++i) {
    const TightWalk g = members[i].walk();
    Tuple e2 = head(g, k);
    std::reverse(e2.begin(), e2.end());
    auto c = splice(tail(chain, k), e2);
    if (!c) {
      out.partial = chain;
      out.failure = "splice to gadget " + std::to_string(i + 1) + " failed";
      return out;
    }
    chain = concat(chain, *c, k, static_cast<std::size_t>(k - 1));
    chain = concat(chain, g, k, static_cast<std::size_t>(k - 1));
  }
  Tuple e2 = head(chain, k);
  std::reverse(e2.begin(), e2.end());
  auto closing = splice(tail(chain, k), e2);
  if (!closing) {
    out.partial = chain;
    out.failure = "closing splice failed";
    return out;
  }
  out.cycle = join_cycle(chain, *closing, k);
  if (!verify_walk(system, out.cycle).ok()) throw std::logic_error("absorbing cycle failed verification");
  out.ok = true;
  return out;
}

AbsorbingCycle build_absorbing_cycle(const HypergraphSystem& system, const PipelineParams& params, std::uint64_t seed,
                                     std::optional<int> count) {
  AbsorberFamily family;
  if (params.desk) {
    family = random_gadgets(system, count.value_or(params.absorbers.value_or(1)), seed);
  } else {
    family = sample_family(system, params.zeta_or_default(system.k()), seed).family;
  }
  return connect_family(system, family, params);
}

namespace {

struct Assignment {
  // Paths: gadget, oriented path, o. Vertices: gadget, colour.
  struct PathItem {
    std::size_t gadget;
    TightWalk path;
    std::vector<Color> o;
  };
  struct VertexItem {
    std::size_t gadget;
    Vertex x;
    Color c;
  };
  std::vector<PathItem> paths;
  std::vector<VertexItem> vertices;
};

class AbsorptionSearch {
 public:
  AbsorptionSearch(const HypergraphSystem& system, const std::vector<Gadget>& gadgets, std::vector<Color> colors,
                   std::uint64_t limit)
      : sys_(system), k_(system.k()), gadgets_(gadgets), limit_(limit),
        free_c_(static_cast<std::size_t>(system.m()) + 1, 0), free_g_(gadgets.size(), 1) {
    for (Color c : colors) free_c_[static_cast<std::size_t>(c)] = 1;
  }

  std::optional<Assignment> run(const std::vector<TightWalk>& paths, const std::vector<Vertex>& vertices) {
    paths_ = &paths;
    vertices_ = &vertices;
    if (paths.size() + vertices.size() > gadgets_.size()) return std::nullopt;
    result_ = {};
    if (place_path(0)) return result_;
    return std::nullopt;
  }

  bool exhausted = false;

 private:
  bool tick() {
    if (++steps_ > limit_) exhausted = true;
    return !exhausted;
  }

  bool place_path(std::size_t i) {
    if (i == paths_->size()) return place_vertex(0);
    if (!tick()) return false;
    const TightWalk& p = (*paths_)[i];
    for (std::size_t g = 0; g < gadgets_.size(); ++g) {
      if (!free_g_[g]) continue;
      for (int orient = 0; orient < 2; ++orient) {
        TightWalk w = orient == 0 ? p : reverse(p, k_);
        const Gadget& gd = gadgets_[g];
        EndsTarget target{Tuple(w.vertices.begin(), w.vertices.begin() + (k_ - 1)),
                          Tuple(w.vertices.end() - (k_ - 1), w.vertices.end()), {}};
        // Colour options per re-entry window.
        std::vector<std::vector<Color>> options(static_cast<std::size_t>(k_ - 1));
        bool entry_ok = true;
        for (int idx = 1; idx <= k_ - 1 && entry_ok; ++idx) {
          Tuple entry(gd.vertices.begin() + (idx - 1), gd.vertices.begin() + (k_ - 1));
          entry.insert(entry.end(), target.u.begin(), target.u.begin() + idx);
          entry_ok = sys_.has_edge(gd.colors[static_cast<std::size_t>(idx - 1)], entry);
          Tuple exit(target.v.begin() + (idx - 1), target.v.end());
          exit.insert(exit.end(), gd.vertices.begin() + (k_ - 1), gd.vertices.begin() + (k_ - 1) + idx);
          for (Color c = 1; c <= sys_.m(); ++c)
            if (free_c_[static_cast<std::size_t>(c)] && sys_.has_edge(c, exit)) options[static_cast<std::size_t>(idx - 1)].push_back(c);
        }
        if (!entry_ok) continue;
        free_g_[g] = 0;
        std::vector<Color> o;
        bool done = choose_o(options, o, [&] {
          result_.paths.push_back({g, w, o});
          if (place_path(i + 1)) return true;
          result_.paths.pop_back();
          return false;
        });
        free_g_[g] = 1;
        if (done) return true;
        if (exhausted) return false;
      }
    }
    return false;
  }

  template <typename Next>
  bool choose_o(const std::vector<std::vector<Color>>& options, std::vector<Color>& o, Next next) {
    if (o.size() == options.size()) return next();
    for (Color c : options[o.size()]) {
      if (!free_c_[static_cast<std::size_t>(c)]) continue;
      free_c_[static_cast<std::size_t>(c)] = 0;
      o.push_back(c);
      bool done = choose_o(options, o, next);
      o.pop_back();
      free_c_[static_cast<std::size_t>(c)] = 1;
      if (done) return true;
      if (exhausted) return false;
    }
    return false;
  }

  bool place_vertex(std::size_t i) {
    if (i == vertices_->size()) return true;
    if (!tick()) return false;
    const Vertex x = (*vertices_)[i];
    for (std::size_t g = 0; g < gadgets_.size(); ++g) {
      if (!free_g_[g]) continue;
      const Gadget& gd = gadgets_[g];
      for (Color c = 1; c <= sys_.m(); ++c) {
        if (!free_c_[static_cast<std::size_t>(c)]) continue;
        if (!is_absorber(sys_, {gd.vertices, gd.colors, VertexTarget{x, c}})) continue;
        free_g_[g] = 0;
        free_c_[static_cast<std::size_t>(c)] = 0;
        result_.vertices.push_back({g, x, c});
        bool done = place_vertex(i + 1);
        if (!done) result_.vertices.pop_back();
        free_g_[g] = 1;
        free_c_[static_cast<std::size_t>(c)] = 1;
        if (done) return true;
        if (exhausted) return false;
      }
    }
    return false;
  }

  const HypergraphSystem& sys_;
  int k_;
  const std::vector<Gadget>& gadgets_;
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
  std::vector<char> free_c_;
  std::vector<char> free_g_;
  const std::vector<TightWalk>* paths_ = nullptr;
  const std::vector<Vertex>* vertices_ = nullptr;
  Assignment result_;
};

std::vector<Color> unused_colors(const HypergraphSystem& system, const std::vector<const TightWalk*>& walks) {
  std::vector<char> used(static_cast<std::size_t>(system.m()) + 1, 0);
  for (const auto* w : walks)
    for (Color c : w->colors) used[static_cast<std::size_t>(c)] = 1;
  std::vector<Color> out;
  for (Color c = 1; c <= system.m(); ++c)
    if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

} // namespace

PipelineResult find_rainbow_hamilton(const HypergraphSystem& system, const PipelineParams& params, std::uint64_t seed) {
  const int k = system.k(), n = system.n();
  if (system.m() != n) throw std::invalid_argument("a rainbow Hamilton cycle needs m == n");
  if (params.gamma <= 0) throw std::invalid_argument("gamma must be positive");
  PipelineResult res;
  res.accounting.total = static_cast<std::size_t>(n);
  for (Color c = 1; c <= system.m(); ++c) {
    if (system.graph(c).edge_count() == 0) {
      res.stage = "precheck";
      res.failure = "colour " + std::to_string(c) + " has no edges, so no rainbow Hamilton cycle exists";
      return res;
    }
  }

  for (int a = 0; a < params.attempts; ++a) {
    res.attempts = a + 1;
    const std::uint64_t s = derive_seed(seed, 0xa77, static_cast<std::uint64_t>(a));
    const bool fallback_first = a % 2 == 1;
    AbsorberFamily family;
    if (params.desk) {
      const int count = params.absorbers.value_or(1 + a / 2);
      family = random_gadgets(system, count, s);
    } else {
      family = sample_family(system, params.zeta_or_default(k), s).family;
    }
    res.absorbers_used = static_cast<int>(family.size());
    res.stage = "absorbing-cycle";
    AbsorbingCycle A = connect_family(system, family, params, fallback_first);
    if (!A.ok) {
      res.failure = A.failure;
      continue;
    }
    res.absorbing = A.cycle;

    ColorAccounting acc;
    acc.total = static_cast<std::size_t>(n);
    acc.gadget_colors = family.size() * static_cast<std::size_t>(k - 1);
    acc.splice_colors = A.splice_colors;
    acc.unused = unused_colors(system, {&A.cycle}).size();
    if (!acc.balanced()) throw std::logic_error("colour accounting broken after the absorbing cycle");

    res.stage = "path-cover";
    std::vector<char> on_a(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : A.cycle.vertices) on_a[static_cast<std::size_t>(v)] = 1;
    GreedyCoverOptions opts;
    opts.vertices.emplace();
    for (Vertex v = 1; v <= n; ++v)
      if (!on_a[static_cast<std::size_t>(v)]) opts.vertices->push_back(v);
    opts.colors = unused_colors(system, {&A.cycle});
    Rational delta = params.kappa_or_default(k);
    if (params.desk) {
      const std::size_t rest = opts.vertices->size();
      delta = rest == 0 ? Rational(0)
                        : Rational(static_cast<long long>(params.leftover_cap.value_or(0)), static_cast<long long>(rest));
    }
    RainbowFamily cover = greedy_path_cover(system, delta, static_cast<std::size_t>(2 * (k - 1)),
                                            derive_seed(s, 0xc0), opts);
    res.cover = cover;
    std::vector<const TightWalk*> walks{&A.cycle};
    for (const auto& p : cover.paths) walks.push_back(&p);
    std::vector<Color> free_colors = unused_colors(system, walks);
    acc.path_colors = 0;
    for (const auto& p : cover.paths) acc.path_colors += p.colors.size();
    acc.unused = free_colors.size();
    if (!acc.balanced()) throw std::logic_error("colour accounting broken after the path cover");
    res.accounting = acc;

    res.stage = "absorption";
    AbsorptionSearch search(system, family.members(), free_colors, params.assignment_step_limit);
    std::vector<TightWalk> paths = cover.paths;
    std::vector<Vertex> loose = cover.uncovered;
    auto plan = search.run(paths, loose);
    if (!plan) {
      // Dissolve the cover and absorb its vertices one at a time.
      for (const auto& p : paths) loose.insert(loose.end(), p.vertices.begin(), p.vertices.end());
      std::sort(loose.begin(), loose.end());
      paths.clear();
      AbsorptionSearch single(system, family.members(), unused_colors(system, {&A.cycle}), params.assignment_step_limit);
      plan = single.run(paths, loose);
    }
    if (!plan) {
      res.failure = std::to_string(paths.size() + loose.size()) + " items to absorb with " +
                    std::to_string(family.size()) + " absorbers; no compatible assignment";
      continue;
    }

    TightWalk cycle = A.cycle;
    for (const auto& item : plan->paths) {
      const Gadget& g = family.members()[item.gadget];
      EndsTarget t{Tuple(item.path.vertices.begin(), item.path.vertices.begin() + (k - 1)),
                   Tuple(item.path.vertices.end() - (k - 1), item.path.vertices.end()), item.o};
      cycle = absorb_path(system, cycle, {g.vertices, g.colors, t}, item.path);
    }
    for (const auto& item : plan->vertices) {
      const Gadget& g = family.members()[item.gadget];
      cycle = absorb_vertex(system, cycle, {g.vertices, g.colors, VertexTarget{item.x, item.c}});
    }

    res.stage = "verify";
    if (!verify_hamilton(system, cycle)) {
      res.failure = "assembled cycle is not a rainbow Hamilton cycle";
      continue;
    }
    std::set<Vertex> expect(A.cycle.vertices.begin(), A.cycle.vertices.end());
    expect.insert(cover.uncovered.begin(), cover.uncovered.end());
    for (const auto& p : cover.paths) expect.insert(p.vertices.begin(), p.vertices.end());
    std::set<Vertex> got(cycle.vertices.begin(), cycle.vertices.end());
    std::set<Color> final_colors(cycle.colors.begin(), cycle.colors.end());
    res.property_q = expect == got && std::all_of(A.cycle.colors.begin(), A.cycle.colors.end(),
                                                  [&](Color c) { return final_colors.count(c) != 0; });
    res.stage = "done";
    res.failure.clear();
    res.success = true;
    res.cycle = std::move(cycle);
    return res;
  }
  return res;
}

} // namespace rhc
