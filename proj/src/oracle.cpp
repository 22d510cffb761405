#include "rhc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace rhc {

namespace {

class OrderingSearch {
 public:
  explicit OrderingSearch(const HypergraphSystem& system)
      : sys_(system), k_(system.k()), n_(system.n()), binom_(system.n(), system.k()),
        masks_(static_cast<std::size_t>(binom_(system.n(), system.k())), 0),
        used_(static_cast<std::size_t>(system.n()) + 1, 0),
        window_of_color_(static_cast<std::size_t>(system.m()), -1) {
    for (Color c = 1; c <= system.m(); ++c)
      for (const auto& e : system.graph(c).edges()) masks_[rank(e)] |= std::uint64_t{1} << (c - 1);
  }

  bool run() {
    seq_.assign(static_cast<std::size_t>(n_), 0);
    seq_[0] = 1;
    used_[1] = 1;
    return place(1);
  }

  std::uint64_t scanned = 0;
  TightWalk witness;

 private:
  std::size_t rank(const Tuple& sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binom_(sorted[i] - 1, static_cast<int>(i) + 1);
    return static_cast<std::size_t>(r);
  }

  std::uint64_t window_mask(int start) const {
    Tuple w(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) w[static_cast<std::size_t>(i)] = seq_[static_cast<std::size_t>((start + i) % n_)];
    std::sort(w.begin(), w.end());
    return masks_[rank(w)];
  }

  // Kuhn augmentation from window w; colour_of_window_ / window_of_color_
  // hold the current matching.
  bool augment(int w, std::uint64_t& seen) {
    std::uint64_t options = win_masks_[static_cast<std::size_t>(w)] & ~seen;
    while (options) {
      const int c = __builtin_ctzll(options);
      options &= options - 1;
      seen |= std::uint64_t{1} << c;
      const int holder = window_of_color_[static_cast<std::size_t>(c)];
      if (holder < 0 || augment(holder, seen)) {
        window_of_color_[static_cast<std::size_t>(c)] = w;
        color_of_window_[static_cast<std::size_t>(w)] = c;
        return true;
      }
    }
    return false;
  }

  // Closes window `start`; false if it has no colour or the matching cannot
  // be extended.
  bool add_window(int start) {
    const std::uint64_t mask = window_mask(start);
    if (!mask) return false;
    win_masks_.push_back(mask);
    color_of_window_.push_back(-1);
    std::uint64_t seen = 0;
    if (augment(static_cast<int>(win_masks_.size()) - 1, seen)) return true;
    win_masks_.pop_back();
    color_of_window_.pop_back();
    return false;
  }

  bool place(int pos) {
    if (pos == n_) return close();
    for (Vertex v = 2; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (pos == n_ - 1 && n_ > 2 && v < seq_[1]) continue;
      seq_[static_cast<std::size_t>(pos)] = v;
      used_[static_cast<std::size_t>(v)] = 1;
      const auto saved_c = window_of_color_;
      const auto saved_w = color_of_window_;
      const std::size_t saved_n = win_masks_.size();
      bool ok = pos < k_ - 1 || add_window(pos - k_ + 1);
      if (ok && place(pos + 1)) return true;
      win_masks_.resize(saved_n);
      window_of_color_ = saved_c;
      color_of_window_ = saved_w;
      used_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  bool close() {
    ++scanned;
    const auto saved_c = window_of_color_;
    const auto saved_w = color_of_window_;
    const std::size_t saved_n = win_masks_.size();
    bool ok = true;
    for (int start = n_ - k_ + 1; start < n_ && ok; ++start) ok = add_window(start);
    if (ok) {
      witness.vertices = seq_;
      witness.is_cycle = true;
      witness.colors.clear();
      for (int c : color_of_window_) witness.colors.push_back(c + 1);
      return true;
    }
    win_masks_.resize(saved_n);
    window_of_color_ = saved_c;
    color_of_window_ = saved_w;
    return false;
  }

  const HypergraphSystem& sys_;
  int k_;
  int n_;
  BinomialTable binom_;
  std::vector<std::uint64_t> masks_;
  std::vector<char> used_;
  Tuple seq_;
  std::vector<std::uint64_t> win_masks_;
  std::vector<int> color_of_window_;
  std::vector<int> window_of_color_;
};

} // namespace

OracleResult oracle_hamilton(const HypergraphSystem& system, int cap) {
  if (system.m() != system.n()) throw std::invalid_argument("the oracle needs m == n");
  if (system.n() > cap) throw std::invalid_argument("n = " + std::to_string(system.n()) + " exceeds the oracle cap " + std::to_string(cap));
  if (system.m() > 64) throw std::invalid_argument("the oracle supports at most 64 colours");
  const auto start = std::chrono::steady_clock::now();
  OracleResult r;
  bool empty_color = false;
  for (Color c = 1; c <= system.m(); ++c) empty_color = empty_color || system.graph(c).edge_count() == 0;
  if (!empty_color) {
    OrderingSearch s(system);
    r.exists = s.run();
    r.orderings_scanned = s.scanned;
    if (r.exists) {
      if (!verify_hamilton(system, s.witness)) throw std::logic_error("oracle witness failed verification");
      r.witness = s.witness;
    }
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace rhc
