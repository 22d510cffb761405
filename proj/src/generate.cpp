#include "rhc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rhc/random.hpp"

namespace rhc {

std::optional<GenKind> parse_kind(std::string_view name) {
  if (name == "complete") return GenKind::Complete;
  if (name == "random") return GenKind::Random;
  if (name == "identical") return GenKind::Identical;
  if (name == "subthreshold") return GenKind::Subthreshold;
  return std::nullopt;
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::Complete: return "complete";
    case GenKind::Random: return "random";
    case GenKind::Identical: return "identical";
    case GenKind::Subthreshold: return "subthreshold";
  }
  return "?";
}

int conjectured_threshold(int n, int k) { return (n - k + 3) / 2; }

namespace {

// Calls f on every k-subset of [1, n] in lexicographic order, with its colex
// rank.
template <typename F>
void for_each_subset(int n, int k, const BinomialTable& binom, F f) {
  Tuple cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += binom(cur[static_cast<std::size_t>(i)] - 1, i + 1);
    f(cur, r);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
  }
}

KGraph random_graph(int n, int k, double p, std::uint64_t seed, std::uint64_t key, const BinomialTable& binom) {
  KGraph g(k, n);
  for_each_subset(n, k, binom, [&](const Tuple& e, std::uint64_t r) {
    if (counter_uniform(seed, key, r) < p) g.add_edge(e);
  });
  return g;
}

std::uint64_t rank_of(const Tuple& sorted, const BinomialTable& binom) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] - 1, static_cast<int>(i) + 1);
  return r;
}

// Parity candidate over bipartition A, then random repair edges until the
// least (k-1)-degree reaches the target. Returns nullopt if it overshoots.
std::optional<KGraph> subthreshold_graph(int n, int k, int target, const std::vector<char>& in_a, int parity,
                                         std::uint64_t seed, std::uint64_t key, const BinomialTable& binom) {
  const std::size_t total = static_cast<std::size_t>(binom(n, k));
  std::vector<char> edge(total, 0);
  std::vector<int> degree(static_cast<std::size_t>(binom(n, k - 1)), 0);
  auto add = [&](const Tuple& e, std::uint64_t r) {
    edge[r] = 1;
    for (int skip = 0; skip < k; ++skip) {
      Tuple s;
      for (int i = 0; i < k; ++i)
        if (i != skip) s.push_back(e[static_cast<std::size_t>(i)]);
      ++degree[rank_of(s, binom)];
    }
  };
  for_each_subset(n, k, binom, [&](const Tuple& e, std::uint64_t r) {
    int hits = 0;
    for (Vertex v : e) hits += in_a[static_cast<std::size_t>(v)];
    if (hits % 2 == parity) add(e, r);
  });

  Rng rng(derive_seed(seed, key, 0x5b7));
  std::vector<Tuple> sets;
  for_each_subset(n, k - 1, binom, [&](const Tuple& s, std::uint64_t) { sets.push_back(s); });
  for (;;) {
    std::vector<const Tuple*> low;
    for (const auto& s : sets)
      if (degree[rank_of(s, binom)] < target) low.push_back(&s);
    if (low.empty()) break;
    const Tuple& s = *low[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(low.size()) - 1))];
    std::vector<std::pair<Tuple, std::uint64_t>> options;
    for (Vertex v = 1; v <= n; ++v) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      Tuple e = s;
      e.insert(std::upper_bound(e.begin(), e.end(), v), v);
      const std::uint64_t r = rank_of(e, binom);
      if (!edge[r]) options.emplace_back(std::move(e), r);
    }
    if (options.empty()) return std::nullopt;
    auto& pick = options[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(options.size()) - 1))];
    add(pick.first, pick.second);
  }
  const int least = *std::min_element(degree.begin(), degree.end());
  if (least != target) return std::nullopt;

  KGraph g(k, n);
  for_each_subset(n, k, binom, [&](const Tuple& e, std::uint64_t r) {
    if (edge[r]) g.add_edge(e);
  });
  return g;
}

} // namespace

HypergraphSystem generate(const GenParams& params) {
  const int n = params.n, k = params.k;
  const int m = params.m.value_or(n);
  if (k < 2 || k > kMaxUniformity) throw std::invalid_argument("k must lie in [2, 8]");
  if (n < k) throw std::invalid_argument("n must be at least k");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (params.p < 0 || params.p > 1) throw std::invalid_argument("p must lie in [0, 1]");
  const BinomialTable binom(n, k);
  const double p = to_double(params.p);

  switch (params.kind) {
    case GenKind::Complete: {
      KGraph g(k, n);
      for_each_subset(n, k, binom, [&](const Tuple& e, std::uint64_t) { g.add_edge(e); });
      return HypergraphSystem(std::vector<KGraph>(static_cast<std::size_t>(m), g));
    }
    case GenKind::Random: {
      for (int attempt = 0; attempt < std::max(1, params.retries); ++attempt) {
        const std::uint64_t s = attempt == 0 ? params.seed : derive_seed(params.seed, 0x4e7, static_cast<std::uint64_t>(attempt));
        std::vector<KGraph> graphs;
        for (int c = 1; c <= m; ++c) graphs.push_back(random_graph(n, k, p, s, static_cast<std::uint64_t>(c), binom));
        HypergraphSystem sys(std::move(graphs));
        if (!params.delta_target || degree_report(sys).global_min >= *params.delta_target) return sys;
      }
      throw std::runtime_error("delta_target not reached within the retry budget");
    }
    case GenKind::Identical: {
      KGraph g = random_graph(n, k, p, params.seed, 0, binom);
      return HypergraphSystem(std::vector<KGraph>(static_cast<std::size_t>(m), g));
    }
    case GenKind::Subthreshold: {
      const int target = params.delta_target.value_or(conjectured_threshold(n, k) - 1);
      if (target < 0 || target > n - k + 1) throw std::invalid_argument("delta_target out of range");
      for (int attempt = 0; attempt < std::max(1, params.retries); ++attempt) {
        Rng rng(derive_seed(params.seed, 0x5ab, static_cast<std::uint64_t>(attempt)));
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        shuffle(order, rng);
        const int a_size = n / 2 + static_cast<int>(uniform_int(rng, 0, n % 2));
        std::vector<char> in_a(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < a_size; ++i) in_a[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
        const int parity = static_cast<int>(uniform_int(rng, 0, 1));
        const std::uint64_t s = derive_seed(params.seed, 0x5ac, static_cast<std::uint64_t>(attempt));
        std::vector<KGraph> graphs;
        for (int c = 1; c <= m; ++c) {
          auto g = subthreshold_graph(n, k, target, in_a, parity, s, static_cast<std::uint64_t>(c), binom);
          if (!g) break;
          graphs.push_back(std::move(*g));
        }
        if (static_cast<int>(graphs.size()) == m) return HypergraphSystem(std::move(graphs));
      }
      throw std::runtime_error("delta_target not reached within the retry budget");
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

} // namespace rhc
