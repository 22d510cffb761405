#include "rhc/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace rhc {

BinomialTable::BinomialTable(int n, int k) : k_(k), table_(static_cast<std::size_t>(n + 1) * (k + 1), 0) {
  for (int a = 0; a <= n; ++a) {
    table_[static_cast<std::size_t>(a) * (k + 1)] = 1;
    for (int b = 1; b <= std::min(a, k); ++b) {
      std::uint64_t left = a > 0 ? (*this)(a - 1, b - 1) : 0;
      std::uint64_t right = a > 0 ? (*this)(a - 1, b) : 0;
      table_[static_cast<std::size_t>(a) * (k + 1) + b] = left + right;
    }
  }
}

namespace {

using Scratch = std::array<Vertex, kMaxUniformity>;

// Copies and sorts; returns false on a repeated vertex.
bool sorted_copy(std::span<const Vertex> in, Scratch& out) {
  std::copy(in.begin(), in.end(), out.begin());
  std::sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(in.size()));
  return std::adjacent_find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(in.size())) ==
         out.begin() + static_cast<std::ptrdiff_t>(in.size());
}

} // namespace

KGraph::KGraph(int k, int n) : k_(k), n_(n) {
  if (k < 2 || k > kMaxUniformity) throw std::invalid_argument("uniformity k must lie in [2, 8]");
  if (n < k) throw std::invalid_argument("vertex count n must be at least k");
  binom_ = std::make_shared<const BinomialTable>(n, k);
  std::uint64_t slots = (*binom_)(n, k);
  if (slots > (std::uint64_t{1} << 34)) throw std::invalid_argument("instance too large for dense edge index");
  bits_.assign(static_cast<std::size_t>((slots + 63) / 64), 0);
  index_ = std::make_shared<NeighborIndex>();
}

KGraph::KGraph(int k, int n, std::vector<Tuple> edges) : KGraph(k, n) {
  for (const auto& e : edges) add_edge(e);
}

void KGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
}

std::uint64_t KGraph::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += (*binom_)(sorted[i] - 1, static_cast<int>(i) + 1);
  return r;
}

bool KGraph::add_edge(std::span<const Vertex> e) {
  if (static_cast<int>(e.size()) != k_) throw std::invalid_argument("edge must have exactly k vertices");
  for (Vertex v : e) check_vertex(v);
  Scratch s;
  if (!sorted_copy(e, s)) throw std::invalid_argument("edge has a repeated vertex");
  std::span<const Vertex> sv(s.data(), e.size());
  std::uint64_t r = rank(sv);
  std::uint64_t& word = bits_[r / 64];
  std::uint64_t mask = std::uint64_t{1} << (r % 64);
  if (word & mask) return false;
  word |= mask;
  Tuple t(sv.begin(), sv.end());
  if (edges_.empty() || edges_.back() < t) {
    edges_.push_back(std::move(t));
  } else {
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), t), std::move(t));
  }
  index_ = std::make_shared<NeighborIndex>();
  return true;
}

bool KGraph::contains(std::span<const Vertex> e) const {
  if (static_cast<int>(e.size()) != k_) return false;
  for (Vertex v : e)
    if (v < 1 || v > n_) return false;
  Scratch s;
  if (!sorted_copy(e, s)) return false;
  std::uint64_t r = rank(std::span<const Vertex>(s.data(), e.size()));
  return (bits_[r / 64] >> (r % 64)) & 1U;
}

const KGraph::NeighborIndex& KGraph::index() const {
  std::call_once(index_->once, [this] {
    auto& lists = index_->lists;
    lists.assign(static_cast<std::size_t>((*binom_)(n_, k_ - 1)), {});
    Scratch sub;
    for (const auto& e : edges_) {
      for (int drop = 0; drop < k_; ++drop) {
        int w = 0;
        for (int i = 0; i < k_; ++i)
          if (i != drop) sub[w++] = e[i];
        lists[rank(std::span<const Vertex>(sub.data(), k_ - 1))].push_back(e[drop]);
      }
    }
    for (auto& l : lists) std::sort(l.begin(), l.end());
  });
  return *index_;
}

std::span<const Vertex> KGraph::neighbors(std::span<const Vertex> s) const {
  if (static_cast<int>(s.size()) != k_ - 1) throw std::invalid_argument("neighbourhood query needs a (k-1)-set");
  for (Vertex v : s) check_vertex(v);
  Scratch sc;
  if (!sorted_copy(s, sc)) throw std::invalid_argument("neighbourhood query has a repeated vertex");
  const auto& l = index().lists[rank(std::span<const Vertex>(sc.data(), s.size()))];
  return {l.data(), l.size()};
}

int KGraph::codegree(std::span<const Vertex> s) const {
  if (static_cast<int>(s.size()) > k_) throw std::invalid_argument("codegree set larger than k");
  for (Vertex v : s) check_vertex(v);
  Scratch sc;
  if (!sorted_copy(s, sc)) throw std::invalid_argument("codegree set has a repeated vertex");
  if (static_cast<int>(s.size()) == k_) return contains(s) ? 1 : 0;
  if (static_cast<int>(s.size()) == k_ - 1) return static_cast<int>(neighbors(s).size());
  int count = 0;
  for (const auto& e : edges_)
    if (std::includes(e.begin(), e.end(), sc.begin(), sc.begin() + static_cast<std::ptrdiff_t>(s.size()))) ++count;
  return count;
}

int KGraph::min_codegree() const {
  const auto& lists = index().lists;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& l : lists) best = std::min(best, l.size());
  return lists.empty() ? 0 : static_cast<int>(best);
}

HypergraphSystem::HypergraphSystem(int k, int n, int m) : k_(k), n_(n) {
  if (m < 1) throw std::invalid_argument("a system needs at least one colour");
  graphs_.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) graphs_.emplace_back(k, n);
}

HypergraphSystem::HypergraphSystem(std::vector<KGraph> graphs) : graphs_(std::move(graphs)) {
  if (graphs_.empty()) throw std::invalid_argument("a system needs at least one colour");
  k_ = graphs_.front().k();
  n_ = graphs_.front().n();
  for (const auto& g : graphs_)
    if (g.k() != k_ || g.n() != n_) throw std::invalid_argument("member graphs disagree on k or n");
}

const KGraph& HypergraphSystem::graph(Color c) const {
  if (!valid_color(c)) throw std::out_of_range("colour " + std::to_string(c) + " outside [1, " + std::to_string(m()) + "]");
  return graphs_[static_cast<std::size_t>(c - 1)];
}

KGraph& HypergraphSystem::graph(Color c) {
  if (!valid_color(c)) throw std::out_of_range("colour " + std::to_string(c) + " outside [1, " + std::to_string(m()) + "]");
  return graphs_[static_cast<std::size_t>(c - 1)];
}

std::size_t HypergraphSystem::total_edges() const {
  std::size_t total = 0;
  for (const auto& g : graphs_) total += g.edge_count();
  return total;
}

int codegree(const KGraph& h, std::span<const Vertex> s) { return h.codegree(s); }

DegreeReport degree_report(const HypergraphSystem& system) {
  DegreeReport r;
  r.per_color.reserve(static_cast<std::size_t>(system.m()));
  for (const auto& g : system.graphs()) r.per_color.push_back(g.min_codegree());
  r.global_min = *std::min_element(r.per_color.begin(), r.per_color.end());
  r.gamma_max = Rational(r.global_min, system.n()) - Rational(1, 2);
  return r;
}

bool satisfies_gamma(const HypergraphSystem& system, const Rational& gamma) {
  Rational need = (Rational(1, 2) + gamma) * system.n();
  for (const auto& g : system.graphs())
    if (Rational(g.min_codegree()) < need) return false;
  return true;
}

Fact31Result check_fact31(const HypergraphSystem& system, std::span<const Vertex> s1,
                          std::span<const Vertex> s2, std::span<const Vertex> v0,
                          const Rational& gamma, std::size_t max_witnesses) {
  const int k = system.k();
  const int n = system.n();
  if (static_cast<int>(s1.size()) != k - 1 || static_cast<int>(s2.size()) != k - 1)
    throw std::invalid_argument("S1 and S2 must have exactly k-1 vertices");

  Fact31Result res;
  res.precondition_met = satisfies_gamma(system, gamma);

  std::vector<char> in_v0(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : v0) {
    if (!system.valid_vertex(v)) throw std::out_of_range("V0 vertex out of range");
    in_v0[static_cast<std::size_t>(v)] = 1;
  }

  auto record = [&](Fact31Witness w) {
    if (res.witnesses.size() < max_witnesses) res.witnesses.push_back(std::move(w));
  };

  // Bound 1, applied to each of S1 and S2 against V0 \ S.
  for (auto s : {s1, s2}) {
    std::vector<char> v0s = in_v0;
    for (Vertex v : s) v0s[static_cast<std::size_t>(v)] = 0;
    long long size = std::count(v0s.begin(), v0s.end(), 1);
    Rational required = Rational(size) - Rational(n, 2) + gamma * n + (k - 1);
    for (Color c = 1; c <= system.m(); ++c) {
      long long hit = 0;
      for (Vertex u : system.graph(c).neighbors(s))
        if (v0s[static_cast<std::size_t>(u)]) ++hit;
      ++res.checks;
      if (Rational(hit) < required) {
        res.bound1_holds = false;
        record({1, c, 0, Tuple(s.begin(), s.end()), hit, required});
      }
    }
  }

  Tuple a(s1.begin(), s1.end()), b(s2.begin(), s2.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  Tuple common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  Rational required2 = 2 * gamma * n + static_cast<long long>(common.size());
  for (Color i = 1; i <= system.m(); ++i) {
    auto ni = system.graph(i).neighbors(s1);
    for (Color j = 1; j <= system.m(); ++j) {
      auto nj = system.graph(j).neighbors(s2);
      Tuple both;
      std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(), std::back_inserter(both));
      ++res.checks;
      if (Rational(static_cast<long long>(both.size())) < required2) {
        res.bound2_holds = false;
        record({2, i, j, {}, static_cast<long long>(both.size()), required2});
      }
    }
  }
  return res;
}

} // namespace rhc
