#include "rhc/absorber.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "rhc/random.hpp"

namespace rhc {

namespace {

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

bool tight_rainbow(const HypergraphSystem& system, const TightWalk& w) {
  try {
    return verify_walk(system, w).ok();
  } catch (const std::exception&) {
    return false;
  }
}

// Depth-first construction of absorbers in the order used by the counting
// argument. Vertex and colour marks are shared along the recursion.
class AbsorberEnumerator {
 public:
  AbsorberEnumerator(const HypergraphSystem& system, const AbsorberTarget& target,
                     const std::function<bool(const AbsorberRecord&)>& visit)
      : sys_(system),
        k_(system.k()),
        visit_(visit),
        used_v_(static_cast<std::size_t>(system.n()) + 1, 0),
        used_c_(static_cast<std::size_t>(system.m()) + 1, 0) {
    rec_.vertices.assign(static_cast<std::size_t>(2 * k_ - 2), 0);
    rec_.colors.assign(static_cast<std::size_t>(k_ - 1), 0);
    rec_.target = target;
  }

  std::uint64_t run() {
    if (const auto* vt = std::get_if<VertexTarget>(&rec_.target)) {
      vertex_target_ = *vt;
      used_v_[static_cast<std::size_t>(vt->x)] = 1;
      used_c_[static_cast<std::size_t>(vt->c)] = 1;
    } else {
      ends_target_ = std::get<EndsTarget>(rec_.target);
      for (Vertex v : ends_target_.u) used_v_[static_cast<std::size_t>(v)] = 1;
      for (Vertex v : ends_target_.v) used_v_[static_cast<std::size_t>(v)] = 1;
      for (Color c : ends_target_.o) used_c_[static_cast<std::size_t>(c)] = 1;
    }
    pick_color(0);
    return visited_;
  }

 private:
  bool is_vertex_target() const { return std::holds_alternative<VertexTarget>(rec_.target); }

  // 1-based accessors into the record.
  Vertex& x(int i) { return rec_.vertices[static_cast<std::size_t>(i - 1)]; }
  Color& c(int i) { return rec_.colors[static_cast<std::size_t>(i - 1)]; }

  void emit() {
    ++visited_;
    if (!visit_(rec_)) stop_ = true;
  }

  template <typename Next>
  void try_vertices(std::span<const Vertex> candidates, int position, Next next) {
    for (Vertex v : candidates) {
      if (used_v_[static_cast<std::size_t>(v)]) continue;
      used_v_[static_cast<std::size_t>(v)] = 1;
      x(position) = v;
      next();
      used_v_[static_cast<std::size_t>(v)] = 0;
      if (stop_) return;
    }
  }

  void pick_color(int i) {
    if (stop_) return;
    if (i == k_ - 1) {
      if (is_vertex_target()) pick_prefix(1);
      else pick_u_side(k_ - 1);
      return;
    }
    for (Color col = 1; col <= sys_.m(); ++col) {
      if (used_c_[static_cast<std::size_t>(col)]) continue;
      used_c_[static_cast<std::size_t>(col)] = 1;
      rec_.colors[static_cast<std::size_t>(i)] = col;
      pick_color(i + 1);
      used_c_[static_cast<std::size_t>(col)] = 0;
      if (stop_) return;
    }
  }

  // Vertex targets: x_1..x_{k-2} free, then x_{k-1} closes {x_1..x_{k-1}, x}
  // in colour c.
  void pick_prefix(int i) {
    if (stop_) return;
    if (i <= k_ - 2) {
      std::vector<Vertex> all(static_cast<std::size_t>(sys_.n()));
      for (int v = 1; v <= sys_.n(); ++v) all[static_cast<std::size_t>(v - 1)] = v;
      try_vertices(all, i, [&] { pick_prefix(i + 1); });
      return;
    }
    std::vector<Vertex> s;
    for (int j = 1; j <= k_ - 2; ++j) s.push_back(x(j));
    s.push_back(vertex_target_.x);
    auto cand = sys_.graph(vertex_target_.c).neighbors(s);
    try_vertices(cand, k_ - 1, [&] { pick_tail(k_); });
  }

  // Ends targets: x_{k-1} first, then x_{k-2} down to x_1 so that
  // {x_i..x_{k-1}, u_1..u_i} lies in colour c_i.
  void pick_u_side(int i) {
    if (stop_) return;
    if (i == 0) {
      pick_tail(k_);
      return;
    }
    std::vector<Vertex> s;
    for (int j = i + 1; j <= k_ - 1; ++j) s.push_back(x(j));
    for (int j = 0; j < i; ++j) s.push_back(ends_target_.u[static_cast<std::size_t>(j)]);
    auto cand = sys_.graph(c(i)).neighbors(s);
    try_vertices(cand, i, [&] { pick_u_side(i - 1); });
  }

  // x_k..x_{2k-2}: both the gadget window and the absorbing window in the
  // matching colour must close.
  void pick_tail(int j) {
    if (stop_) return;
    if (j > 2 * k_ - 2) {
      emit();
      return;
    }
    const int i = j - k_ + 1;
    std::vector<Vertex> gadget_side;
    for (int t = i; t <= j - 1; ++t) gadget_side.push_back(x(t));
    auto a = sys_.graph(c(i)).neighbors(gadget_side);

    std::vector<Vertex> other_side;
    Color other_color;
    if (is_vertex_target()) {
      for (int t = i + 1; t <= k_ - 1; ++t) other_side.push_back(x(t));
      other_side.push_back(vertex_target_.x);
      for (int t = k_; t <= j - 1; ++t) other_side.push_back(x(t));
      other_color = c(i);
    } else {
      for (int t = i; t <= k_ - 1; ++t) other_side.push_back(ends_target_.v[static_cast<std::size_t>(t - 1)]);
      for (int t = k_; t <= j - 1; ++t) other_side.push_back(x(t));
      other_color = ends_target_.o[static_cast<std::size_t>(i - 1)];
    }
    auto b = sys_.graph(other_color).neighbors(other_side);
    auto cand = intersect(a, b);
    try_vertices(cand, j, [&] { pick_tail(j + 1); });
  }

  const HypergraphSystem& sys_;
  int k_;
  const std::function<bool(const AbsorberRecord&)>& visit_;
  AbsorberRecord rec_;
  VertexTarget vertex_target_;
  EndsTarget ends_target_;
  std::vector<char> used_v_;
  std::vector<char> used_c_;
  std::uint64_t visited_ = 0;
  bool stop_ = false;
};

} // namespace

void validate_target(const HypergraphSystem& system, const AbsorberTarget& target) {
  const std::size_t e = static_cast<std::size_t>(system.k() - 1);
  if (const auto* vt = std::get_if<VertexTarget>(&target)) {
    if (!system.valid_vertex(vt->x)) throw std::out_of_range("target vertex out of range");
    if (!system.valid_color(vt->c)) throw std::out_of_range("target colour out of range");
    return;
  }
  const auto& et = std::get<EndsTarget>(target);
  if (et.u.size() != e || et.v.size() != e || et.o.size() != e)
    throw std::invalid_argument("ends target needs two (k-1)-tuples and k-1 colours");
  for (Vertex v : et.u)
    if (!system.valid_vertex(v)) throw std::out_of_range("target vertex out of range");
  for (Vertex v : et.v)
    if (!system.valid_vertex(v)) throw std::out_of_range("target vertex out of range");
  for (Color c : et.o)
    if (!system.valid_color(c)) throw std::out_of_range("target colour out of range");
  if (!distinct(et.u) || !distinct(et.v)) throw std::invalid_argument("target tuple repeats a vertex");
  if (!disjoint(et.u, et.v)) throw std::invalid_argument("target tuples u and v share a vertex");
  if (!distinct(et.o)) throw std::invalid_argument("target colours repeat");
}

bool is_rainbow_gadget(const HypergraphSystem& system, const Gadget& g) {
  const std::size_t k = static_cast<std::size_t>(system.k());
  if (g.vertices.size() != 2 * k - 2 || g.colors.size() != k - 1) return false;
  return tight_rainbow(system, g.walk());
}

bool is_absorber(const HypergraphSystem& system, const AbsorberRecord& rec) {
  const int k = system.k();
  try {
    validate_target(system, rec.target);
  } catch (const std::exception&) {
    return false;
  }
  if (!is_rainbow_gadget(system, rec.gadget())) return false;
  const auto mid = rec.vertices.begin() + (k - 1);

  if (const auto* vt = std::get_if<VertexTarget>(&rec.target)) {
    if (std::find(rec.vertices.begin(), rec.vertices.end(), vt->x) != rec.vertices.end()) return false;
    if (std::find(rec.colors.begin(), rec.colors.end(), vt->c) != rec.colors.end()) return false;
    TightWalk w;
    w.vertices.assign(rec.vertices.begin(), mid);
    w.vertices.push_back(vt->x);
    w.vertices.insert(w.vertices.end(), mid, rec.vertices.end());
    w.colors.push_back(vt->c);
    w.colors.insert(w.colors.end(), rec.colors.begin(), rec.colors.end());
    return tight_rainbow(system, w);
  }

  const auto& et = std::get<EndsTarget>(rec.target);
  if (!disjoint(rec.vertices, et.u) || !disjoint(rec.vertices, et.v)) return false;
  if (!disjoint(rec.colors, et.o)) return false;
  TightWalk entry;
  entry.vertices.assign(rec.vertices.begin(), mid);
  entry.vertices.insert(entry.vertices.end(), et.u.begin(), et.u.end());
  entry.colors = rec.colors;
  TightWalk exit;
  exit.vertices = et.v;
  exit.vertices.insert(exit.vertices.end(), mid, rec.vertices.end());
  exit.colors = et.o;
  return tight_rainbow(system, entry) && tight_rainbow(system, exit);
}

std::uint64_t for_each_absorber(const HypergraphSystem& system, const AbsorberTarget& target,
                                const std::function<bool(const AbsorberRecord&)>& visit) {
  validate_target(system, target);
  AbsorberEnumerator e(system, target, visit);
  return e.run();
}

std::vector<AbsorberRecord> enumerate_absorbers(const HypergraphSystem& system, const AbsorberTarget& target,
                                                std::optional<std::uint64_t> limit) {
  std::vector<AbsorberRecord> out;
  if (limit && *limit == 0) return out;
  for_each_absorber(system, target, [&](const AbsorberRecord& r) {
    out.push_back(r);
    return !limit || out.size() < *limit;
  });
  return out;
}

std::uint64_t count_absorbers(const HypergraphSystem& system, const AbsorberTarget& target) {
  return for_each_absorber(system, target, [](const AbsorberRecord&) { return true; });
}

Rational absorber_lower_bound(int k, int n, const Rational& gamma, bool vertex_target) {
  Rational scale = pow(Rational(n), 3 * k - 3);
  if (vertex_target) return pow(Rational(2), 2 - k) * pow(gamma, k) * scale;
  return pow(Rational(2), 1 - k) * pow(gamma, 2 * k - 2) * scale;
}

Rational absorber_count_ratio(const HypergraphSystem& system, const AbsorberTarget& target, const Rational& gamma) {
  Rational bound = absorber_lower_bound(system.k(), system.n(), gamma, std::holds_alternative<VertexTarget>(target));
  if (bound == 0) throw std::invalid_argument("gamma must be positive");
  return Rational(count_absorbers(system, target)) / bound;
}

Rational default_zeta(int k, const Rational& gamma) { return pow(Rational(2), 1 - k) * pow(gamma, 2 * k - 2); }

bool intersecting(const Gadget& a, const Gadget& b) {
  return !disjoint(a.vertices, b.vertices) || !disjoint(a.colors, b.colors);
}

namespace {

bool absorbs_some_vertex(const HypergraphSystem& system, const Gadget& g) {
  const int k = system.k();
  std::vector<Vertex> head(g.vertices.begin(), g.vertices.begin() + (k - 1));
  for (Color c = 1; c <= system.m(); ++c) {
    if (std::find(g.colors.begin(), g.colors.end(), c) != g.colors.end()) continue;
    for (Vertex x : system.graph(c).neighbors(head)) {
      if (std::find(g.vertices.begin(), g.vertices.end(), x) != g.vertices.end()) continue;
      if (is_absorber(system, {g.vertices, g.colors, VertexTarget{x, c}})) return true;
    }
  }
  return false;
}

// Searches u, then v with its colours, for any ends target the gadget serves.
class EndsSearch {
 public:
  EndsSearch(const HypergraphSystem& system, const Gadget& g)
      : sys_(system), g_(g), k_(system.k()),
        used_v_(static_cast<std::size_t>(system.n()) + 1, 0), used_c_(static_cast<std::size_t>(system.m()) + 1, 0) {
    for (Vertex v : g.vertices) used_v_[static_cast<std::size_t>(v)] = 1;
    for (Color c : g.colors) used_c_[static_cast<std::size_t>(c)] = 1;
    u_.assign(static_cast<std::size_t>(k_ - 1), 0);
    v_.assign(static_cast<std::size_t>(k_ - 1), 0);
  }

  bool run() { return pick_u(1); }

 private:
  // Window i of x_1..x_{k-1} u_1..u_{k-1} is {x_i..x_{k-1}, u_1..u_i}.
  bool pick_u(int i) {
    if (i == k_) return pick_v(k_ - 1);
    std::vector<Vertex> s(g_.vertices.begin() + (i - 1), g_.vertices.begin() + (k_ - 1));
    s.insert(s.end(), u_.begin(), u_.begin() + (i - 1));
    for (Vertex u : sys_.graph(g_.colors[static_cast<std::size_t>(i - 1)]).neighbors(s)) {
      if (used_v_[static_cast<std::size_t>(u)]) continue;
      used_v_[static_cast<std::size_t>(u)] = 1;
      u_[static_cast<std::size_t>(i - 1)] = u;
      bool found = pick_u(i + 1);
      used_v_[static_cast<std::size_t>(u)] = 0;
      if (found) return true;
    }
    return false;
  }

  // Window i of v_1..v_{k-1} x_k..x_{2k-2} is {v_i..v_{k-1}, x_k..x_{k+i-1}};
  // choose v_{k-1} first.
  bool pick_v(int i) {
    if (i == 0) return true;
    std::vector<Vertex> s(v_.begin() + i, v_.end());
    s.insert(s.end(), g_.vertices.begin() + (k_ - 1), g_.vertices.begin() + (k_ - 1) + i);
    for (Color o = 1; o <= sys_.m(); ++o) {
      if (used_c_[static_cast<std::size_t>(o)]) continue;
      for (Vertex v : sys_.graph(o).neighbors(s)) {
        if (used_v_[static_cast<std::size_t>(v)]) continue;
        used_v_[static_cast<std::size_t>(v)] = 1;
        used_c_[static_cast<std::size_t>(o)] = 1;
        v_[static_cast<std::size_t>(i - 1)] = v;
        bool found = pick_v(i - 1);
        used_v_[static_cast<std::size_t>(v)] = 0;
        used_c_[static_cast<std::size_t>(o)] = 0;
        if (found) return true;
      }
    }
    return false;
  }

  const HypergraphSystem& sys_;
  const Gadget& g_;
  int k_;
  std::vector<char> used_v_, used_c_;
  std::vector<Vertex> u_, v_;
};

} // namespace

bool absorbs_some_target(const HypergraphSystem& system, const Gadget& g) {
  if (!is_rainbow_gadget(system, g)) return false;
  if (absorbs_some_vertex(system, g)) return true;
  return EndsSearch(system, g).run();
}

void AbsorberFamily::build_index(const HypergraphSystem& system) {
  vertex_index_.clear();
  for (std::size_t pos = 0; pos < members_.size(); ++pos) {
    const auto& g = members_[pos];
    for (Vertex x = 1; x <= system.n(); ++x)
      for (Color c = 1; c <= system.m(); ++c)
        if (is_absorber(system, {g.vertices, g.colors, VertexTarget{x, c}})) vertex_index_[{x, c}].push_back(pos);
  }
  indexed_ = true;
}

std::vector<std::size_t> AbsorberFamily::lookup(const HypergraphSystem& system, const AbsorberTarget& target) const {
  if (const auto* vt = std::get_if<VertexTarget>(&target); vt && indexed_) {
    auto it = vertex_index_.find(*vt);
    return it == vertex_index_.end() ? std::vector<std::size_t>{} : it->second;
  }
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; pos < members_.size(); ++pos)
    if (is_absorber(system, {members_[pos].vertices, members_[pos].colors, target})) out.push_back(pos);
  return out;
}

bool AbsorberFamily::well_formed(const HypergraphSystem& system) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!is_rainbow_gadget(system, members_[i])) return false;
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (intersecting(members_[i], members_[j])) return false;
  }
  return true;
}

SampleResult sample_family(const HypergraphSystem& system, const Rational& zeta, std::uint64_t seed) {
  if (zeta <= 0 || zeta >= 1) throw std::invalid_argument("zeta must lie in (0, 1)");
  const int k = system.k(), n = system.n(), m = system.m();
  const int nv = 2 * k - 2, nc = k - 1;
  SampleResult result;
  auto& st = result.stats;
  if (n < nv || m < nc) return result;

  st.population = falling(n, nv) * falling(m, nc);
  st.probability = pow(Rational(3 * k - 3), -4) * zeta / Rational(falling(n - 1, nv - 1) * falling(m, nc));
  st.expected_size = st.probability * Rational(st.population);
  st.expected_below_one = st.expected_size < 1;

  Rng rng(derive_seed(seed, 0x5a3f));
  const double p = to_double(st.probability);
  const auto population = static_cast<long long>(st.population.convert_to<double>());
  std::binomial_distribution<long long> count_dist(population, std::min(1.0, p));
  const long long target = count_dist(rng);

  std::set<Gadget> drawn;
  std::vector<Vertex> vpool(static_cast<std::size_t>(n));
  std::vector<Color> cpool(static_cast<std::size_t>(m));
  while (static_cast<long long>(drawn.size()) < target) {
    for (int i = 0; i < n; ++i) vpool[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < m; ++i) cpool[static_cast<std::size_t>(i)] = i + 1;
    Gadget g;
    for (int i = 0; i < nv; ++i) {
      auto j = uniform_int(rng, i, n - 1);
      std::swap(vpool[static_cast<std::size_t>(i)], vpool[static_cast<std::size_t>(j)]);
      g.vertices.push_back(vpool[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < nc; ++i) {
      auto j = uniform_int(rng, i, m - 1);
      std::swap(cpool[static_cast<std::size_t>(i)], cpool[static_cast<std::size_t>(j)]);
      g.colors.push_back(cpool[static_cast<std::size_t>(i)]);
    }
    drawn.insert(std::move(g));
  }
  st.sampled = drawn.size();

  // std::set iterates in lexicographic order; a tuple survives iff no earlier
  // tuple intersects it.
  std::vector<Gadget> ordered(drawn.begin(), drawn.end());
  std::vector<Gadget> survivors;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < i && !hit; ++j) hit = intersecting(ordered[j], ordered[i]);
    if (!hit) survivors.push_back(ordered[i]);
  }
  st.after_intersections = survivors.size();

  std::vector<Gadget> members;
  for (auto& g : survivors)
    if (absorbs_some_target(system, g)) members.push_back(std::move(g));
  st.after_filter = members.size();
  result.family = AbsorberFamily(std::move(members));
  return result;
}

std::optional<std::size_t> locate_gadget(const TightWalk& walk, const Gadget& g, int k) {
  const std::size_t t = walk.vertices.size();
  const std::size_t len = g.vertices.size();
  if (g.vertices.empty() || len > t) return std::nullopt;
  auto it = std::find(walk.vertices.begin(), walk.vertices.end(), g.vertices.front());
  if (it == walk.vertices.end()) return std::nullopt;
  const std::size_t pos = static_cast<std::size_t>(it - walk.vertices.begin());
  if (!walk.is_cycle && pos + len > t) return std::nullopt;
  for (std::size_t i = 0; i < len; ++i)
    if (walk.vertices[(pos + i) % t] != g.vertices[i]) return std::nullopt;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k - 1); ++i) {
    std::size_t w = walk.is_cycle ? (pos + i) % t : pos + i;
    if (w >= walk.colors.size() || walk.colors[w] != g.colors[i]) return std::nullopt;
  }
  return pos;
}

namespace {

// Puts the gadget at position 0 for cycles; returns the working copy and the
// gadget position within it.
std::pair<TightWalk, std::size_t> normalise(const TightWalk& walk, std::size_t pos) {
  if (walk.is_cycle) return {rotate(walk, pos), 0};
  return {walk, pos};
}

TightWalk restore_start(TightWalk w, Vertex first) {
  if (!w.is_cycle) return w;
  auto it = std::find(w.vertices.begin(), w.vertices.end(), first);
  return rotate(w, static_cast<std::size_t>(it - w.vertices.begin()));
}

} // namespace

TightWalk absorb_vertex(const HypergraphSystem& system, const TightWalk& walk, const AbsorberRecord& rec) {
  const int k = system.k();
  const auto* vt = std::get_if<VertexTarget>(&rec.target);
  if (!vt) throw std::invalid_argument("absorb_vertex needs a vertex target");
  validate_structure(walk, k);
  auto pos = locate_gadget(walk, rec.gadget(), k);
  if (!pos) throw std::invalid_argument("absorber not found contiguously in the walk");
  if (std::find(walk.vertices.begin(), walk.vertices.end(), vt->x) != walk.vertices.end())
    throw std::invalid_argument("vertex already on the walk");
  if (std::find(walk.colors.begin(), walk.colors.end(), vt->c) != walk.colors.end())
    throw std::invalid_argument("colour already used by the walk; rainbowness would break");
  if (!is_absorber(system, rec)) throw std::invalid_argument("record is not an absorber for its target");

  auto [w, p] = normalise(walk, *pos);
  const auto ins = static_cast<std::ptrdiff_t>(p) + (k - 1);
  TightWalk out;
  out.is_cycle = w.is_cycle;
  out.vertices.assign(w.vertices.begin(), w.vertices.begin() + ins);
  out.vertices.push_back(vt->x);
  out.vertices.insert(out.vertices.end(), w.vertices.begin() + ins, w.vertices.end());
  out.colors.assign(w.colors.begin(), w.colors.begin() + static_cast<std::ptrdiff_t>(p));
  out.colors.push_back(vt->c);
  out.colors.insert(out.colors.end(), rec.colors.begin(), rec.colors.end());
  out.colors.insert(out.colors.end(), w.colors.begin() + ins, w.colors.end());
  out = restore_start(std::move(out), walk.vertices.front());
  if (!verify_walk(system, out).ok()) throw std::logic_error("absorb_vertex produced an invalid walk");
  return out;
}

TightWalk absorb_path(const HypergraphSystem& system, const TightWalk& walk, const AbsorberRecord& rec,
                      const TightWalk& path) {
  const int k = system.k();
  const auto* et = std::get_if<EndsTarget>(&rec.target);
  if (!et) throw std::invalid_argument("absorb_path needs an ends target");
  validate_structure(walk, k);
  validate_structure(path, k);
  if (path.is_cycle) throw std::invalid_argument("only paths can be absorbed");
  auto pos = locate_gadget(walk, rec.gadget(), k);
  if (!pos) throw std::invalid_argument("absorber not found contiguously in the walk");

  const std::size_t e = static_cast<std::size_t>(k - 1);
  if (path.vertices.size() < 2 * e || !std::equal(et->u.begin(), et->u.end(), path.vertices.begin()) ||
      !std::equal(et->v.begin(), et->v.end(), path.vertices.end() - static_cast<std::ptrdiff_t>(e)))
    throw std::invalid_argument("path must start with u and end with v");
  if (!disjoint(path.vertices, walk.vertices)) throw std::invalid_argument("path shares a vertex with the walk");
  if (!disjoint(path.colors, walk.colors)) throw std::invalid_argument("path shares a colour with the walk");
  if (!disjoint(et->o, walk.colors) || !disjoint(et->o, path.colors))
    throw std::invalid_argument("junction colours already in use");
  if (!verify_walk(system, path).ok()) throw std::invalid_argument("path is not a rainbow tight path");
  if (!is_absorber(system, rec)) throw std::invalid_argument("record is not an absorber for its target; junction edge missing");

  auto [w, p] = normalise(walk, *pos);
  const auto ins = static_cast<std::ptrdiff_t>(p) + (k - 1);
  TightWalk out;
  out.is_cycle = w.is_cycle;
  out.vertices.assign(w.vertices.begin(), w.vertices.begin() + ins);
  out.vertices.insert(out.vertices.end(), path.vertices.begin(), path.vertices.end());
  out.vertices.insert(out.vertices.end(), w.vertices.begin() + ins, w.vertices.end());
  out.colors.assign(w.colors.begin(), w.colors.begin() + static_cast<std::ptrdiff_t>(p));
  out.colors.insert(out.colors.end(), rec.colors.begin(), rec.colors.end());
  out.colors.insert(out.colors.end(), path.colors.begin(), path.colors.end());
  out.colors.insert(out.colors.end(), et->o.begin(), et->o.end());
  out.colors.insert(out.colors.end(), w.colors.begin() + ins, w.colors.end());
  out = restore_start(std::move(out), walk.vertices.front());
  if (!verify_walk(system, out).ok()) throw std::logic_error("absorb_path produced an invalid walk");
  return out;
}

} // namespace rhc
