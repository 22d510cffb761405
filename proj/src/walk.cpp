#include "rhc/walk.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rhc {

std::size_t window_count(std::size_t t, int k, bool is_cycle) {
  if (is_cycle) return t;
  return t + 1 > static_cast<std::size_t>(k) ? t - static_cast<std::size_t>(k) + 1 : 0;
}

void validate_structure(const TightWalk& w, int k) {
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("walk repeats a vertex");
  if (w.is_cycle && w.vertices.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("cycle shorter than k");
  if (w.colors.size() != window_count(w.vertices.size(), k, w.is_cycle))
    throw std::invalid_argument("colour sequence length does not match walk length");
}

std::vector<Vertex> window(const TightWalk& w, int k, std::size_t i) {
  std::vector<Vertex> out(static_cast<std::size_t>(k));
  const std::size_t t = w.vertices.size();
  for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(j)] = w.vertices[(i + static_cast<std::size_t>(j)) % t];
  return out;
}

WalkVerdict verify_walk(const HypergraphSystem& system, const TightWalk& w) {
  const int k = system.k();
  validate_structure(w, k);
  for (Color c : w.colors)
    if (!system.valid_color(c)) throw std::out_of_range("colour " + std::to_string(c) + " outside [1, m]");
  for (Vertex v : w.vertices)
    if (!system.valid_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, n]");

  WalkVerdict verdict;
  for (std::size_t i = 0; i < w.colors.size(); ++i) {
    if (!system.has_edge(w.colors[i], window(w, k, i))) {
      verdict.tight_ok = false;
      verdict.bad_window = i;
      break;
    }
  }
  std::set<Color> seen;
  for (Color c : w.colors) {
    if (!seen.insert(c).second) {
      verdict.rainbow_ok = false;
      verdict.repeated_color = c;
      break;
    }
  }
  return verdict;
}

Ends ends(const TightWalk& path, int k) {
  if (path.is_cycle) throw std::invalid_argument("ends are defined for paths only");
  const std::size_t e = static_cast<std::size_t>(k - 1);
  if (path.vertices.size() < e) throw std::invalid_argument("path shorter than k-1 vertices");
  Tuple first(path.vertices.begin(), path.vertices.begin() + static_cast<std::ptrdiff_t>(e));
  Tuple second(path.vertices.rbegin(), path.vertices.rbegin() + static_cast<std::ptrdiff_t>(e));
  return {std::move(first), std::move(second)};
}

TightWalk reverse(const TightWalk& w, int k) {
  TightWalk r;
  r.is_cycle = w.is_cycle;
  r.vertices.assign(w.vertices.rbegin(), w.vertices.rend());
  if (!w.is_cycle) {
    r.colors.assign(w.colors.rbegin(), w.colors.rend());
    return r;
  }
  // Window starting at reversed position j is the original window starting at
  // t - j - k (mod t).
  const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(w.vertices.size());
  r.colors.resize(w.colors.size());
  for (std::ptrdiff_t j = 0; j < t; ++j) {
    std::ptrdiff_t src = ((t - j - k) % t + t) % t;
    r.colors[static_cast<std::size_t>(j)] = w.colors[static_cast<std::size_t>(src)];
  }
  return r;
}

TightWalk rotate(const TightWalk& cycle, std::size_t shift) {
  if (!cycle.is_cycle) throw std::invalid_argument("only cycles rotate");
  TightWalk r = cycle;
  if (cycle.vertices.empty()) return r;
  shift %= cycle.vertices.size();
  std::rotate(r.vertices.begin(), r.vertices.begin() + static_cast<std::ptrdiff_t>(shift), r.vertices.end());
  std::rotate(r.colors.begin(), r.colors.begin() + static_cast<std::ptrdiff_t>(shift), r.colors.end());
  return r;
}

namespace {

enum class WindowSource { First, Second, Both, Junction };

WindowSource classify(std::size_t p, std::size_t t1, std::size_t t2, int k, std::size_t overlap) {
  const std::size_t kk = static_cast<std::size_t>(k);
  bool in_first = p + kk <= t1;
  bool in_second = p >= t1 - overlap && p + kk <= t1 - overlap + t2;
  if (in_first && in_second) return WindowSource::Both;
  if (in_first) return WindowSource::First;
  if (in_second) return WindowSource::Second;
  return WindowSource::Junction;
}

} // namespace

std::size_t junction_window_count(std::size_t t1, std::size_t t2, int k, std::size_t overlap) {
  const std::size_t t = t1 + t2 - overlap;
  std::size_t count = 0;
  for (std::size_t p = 0; p + static_cast<std::size_t>(k) <= t; ++p)
    if (classify(p, t1, t2, k, overlap) == WindowSource::Junction) ++count;
  return count;
}

TightWalk concat(const TightWalk& w1, const TightWalk& w2, int k, std::size_t overlap,
                 const std::vector<Color>& junction_colors) {
  if (w1.is_cycle || w2.is_cycle) throw std::invalid_argument("concat joins paths only");
  const std::size_t t1 = w1.vertices.size(), t2 = w2.vertices.size();
  if (overlap > t1 || overlap > t2) throw std::invalid_argument("overlap longer than a walk");
  if (!std::equal(w1.vertices.end() - static_cast<std::ptrdiff_t>(overlap), w1.vertices.end(), w2.vertices.begin()))
    throw std::invalid_argument("overlap mismatch");

  TightWalk out;
  out.vertices = w1.vertices;
  out.vertices.insert(out.vertices.end(), w2.vertices.begin() + static_cast<std::ptrdiff_t>(overlap), w2.vertices.end());
  std::vector<Vertex> sorted = out.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex outside the overlap");

  const std::size_t t = out.vertices.size();
  std::size_t next_junction = 0;
  for (std::size_t p = 0; p + static_cast<std::size_t>(k) <= t; ++p) {
    switch (classify(p, t1, t2, k, overlap)) {
      case WindowSource::First:
        out.colors.push_back(w1.colors.at(p));
        break;
      case WindowSource::Second:
        out.colors.push_back(w2.colors.at(p - (t1 - overlap)));
        break;
      case WindowSource::Both:
        if (w1.colors.at(p) != w2.colors.at(p - (t1 - overlap)))
          throw std::invalid_argument("colour sequences disagree on a shared window");
        out.colors.push_back(w1.colors.at(p));
        break;
      case WindowSource::Junction:
        if (next_junction >= junction_colors.size()) throw std::invalid_argument("too few junction colours");
        out.colors.push_back(junction_colors[next_junction++]);
        break;
    }
  }
  if (next_junction != junction_colors.size()) throw std::invalid_argument("too many junction colours");
  return out;
}

TightWalk join_cycle(const TightWalk& path, const TightWalk& closing, int k) {
  const std::ptrdiff_t e = k - 1;
  if (path.is_cycle || closing.is_cycle) throw std::invalid_argument("join_cycle takes two paths");
  if (static_cast<std::ptrdiff_t>(path.vertices.size()) < e || static_cast<std::ptrdiff_t>(closing.vertices.size()) < 2 * e)
    throw std::invalid_argument("paths too short to close");
  if (!std::equal(path.vertices.end() - e, path.vertices.end(), closing.vertices.begin()))
    throw std::invalid_argument("closing path does not start at the path's last k-1 vertices");
  if (!std::equal(path.vertices.begin(), path.vertices.begin() + e, closing.vertices.end() - e))
    throw std::invalid_argument("closing path does not end at the path's first k-1 vertices");
  TightWalk cycle;
  cycle.is_cycle = true;
  cycle.vertices = path.vertices;
  cycle.vertices.insert(cycle.vertices.end(), closing.vertices.begin() + e, closing.vertices.end() - e);
  cycle.colors = path.colors;
  cycle.colors.insert(cycle.colors.end(), closing.colors.begin(), closing.colors.end());
  validate_structure(cycle, k);
  return cycle;
}

bool verify_hamilton(const HypergraphSystem& system, const TightWalk& cycle) {
  if (!cycle.is_cycle) return false;
  const int n = system.n();
  if (static_cast<int>(cycle.vertices.size()) != n || static_cast<int>(cycle.colors.size()) != n) return false;
  std::vector<Vertex> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  for (Color c : cycle.colors)
    if (!system.valid_color(c)) return false;
  return verify_walk(system, cycle).ok();
}

FamilyVerdict check_rainbow_family(const HypergraphSystem& system, const std::vector<TightWalk>& paths) {
  std::set<Vertex> vertices;
  std::set<Color> colors;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (p.is_cycle) return {false, "member " + std::to_string(i) + " is a cycle"};
    if (!verify_walk(system, p).ok()) return {false, "member " + std::to_string(i) + " is not a rainbow tight path"};
    for (Vertex v : p.vertices)
      if (!vertices.insert(v).second) return {false, "vertex " + std::to_string(v) + " shared between members"};
    for (Color c : p.colors)
      if (!colors.insert(c).second) return {false, "colour " + std::to_string(c) + " shared between members"};
  }
  return {};
}

std::string serialize_walk(const TightWalk& w) {
  std::ostringstream out;
  out << (w.is_cycle ? 'C' : 'P') << ' ' << w.vertices.size();
  for (Vertex v : w.vertices) out << ' ' << v;
  out << " ;";
  for (Color c : w.colors) out << ' ' << c;
  return out.str();
}

TightWalk parse_walk(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  if (kind != "P" && kind != "C") throw std::invalid_argument("walk must start with 'P' or 'C'");
  TightWalk w;
  w.is_cycle = kind == "C";
  long long t = -1;
  if (!(in >> t) || t < 0) throw std::invalid_argument("walk length missing");
  for (long long i = 0; i < t; ++i) {
    long long v;
    if (!(in >> v)) throw std::invalid_argument("walk has fewer vertices than its length");
    w.vertices.push_back(static_cast<Vertex>(v));
  }
  std::string sep;
  if (!(in >> sep) || sep != ";") throw std::invalid_argument("expected ';' after vertices");
  long long c;
  while (in >> c) w.colors.push_back(static_cast<Color>(c));
  if (!in.eof()) throw std::invalid_argument("non-integer colour");
  return w;
}

} // namespace rhc
