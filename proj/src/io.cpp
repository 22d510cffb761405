#include "rhc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rhc {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      message_(what) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Reads the next line into tokens; throws at end of input.
  std::vector<Token> next(const char* expected) {
    if (!std::getline(in_, current_)) throw ParseError(line_ + 1, 1, std::string("unexpected end of input, expected ") + expected);
    ++line_;
    if (!current_.empty() && current_.back() == '\r') throw ParseError(line_, static_cast<int>(current_.size()), "CR line ending");
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < current_.size()) {
      if (current_[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < current_.size() && current_[j] != ' ') ++j;
      tokens.push_back({std::string_view(current_).substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    return tokens;
  }

  bool at_end() {
    std::string rest;
    while (std::getline(in_, rest)) {
      ++line_;
      if (!rest.empty()) return false;
    }
    return true;
  }

  int line() const { return line_; }

  long long integer(const Token& t) const {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError(line_, t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return v;
  }

 private:
  std::istream& in_;
  std::string current_;
  int line_ = 0;
};

void expect_count(const LineReader& r, const std::vector<Token>& toks, std::size_t n, const char* what) {
  if (toks.size() != n) {
    int col = toks.size() > n ? toks[n].column : (toks.empty() ? 1 : toks.back().column);
    throw ParseError(r.line(), col, std::string("expected ") + what);
  }
}

} // namespace

HypergraphSystem read_rhg(std::istream& in) {
  LineReader r(in);
  auto header = r.next("header");
  if (header.size() != 2 || header[0].text != "RHG" || header[1].text != "1")
    throw ParseError(r.line(), 1, "expected header 'RHG 1'");

  auto dims = r.next("'<k> <n> <m>'");
  expect_count(r, dims, 3, "'<k> <n> <m>'");
  long long k = r.integer(dims[0]), n = r.integer(dims[1]), m = r.integer(dims[2]);
  if (k < 2 || k > kMaxUniformity) throw ParseError(r.line(), dims[0].column, "k must lie in [2, 8]");
  if (n < k) throw ParseError(r.line(), dims[1].column, "n must be at least k");
  if (m < 1) throw ParseError(r.line(), dims[2].column, "m must be positive");

  HypergraphSystem system(static_cast<int>(k), static_cast<int>(n), static_cast<int>(m));
  for (long long c = 1; c <= m; ++c) {
    auto head = r.next("colour header");
    expect_count(r, head, 3, "'c <i> <edge-count>'");
    if (head[0].text != "c") throw ParseError(r.line(), head[0].column, "expected 'c'");
    if (r.integer(head[1]) != c) throw ParseError(r.line(), head[1].column, "expected colour index " + std::to_string(c));
    long long count = r.integer(head[2]);
    if (count < 0) throw ParseError(r.line(), head[2].column, "negative edge count");
    KGraph& g = system.graph(static_cast<Color>(c));
    Tuple prev;
    for (long long e = 0; e < count; ++e) {
      auto toks = r.next("edge");
      expect_count(r, toks, static_cast<std::size_t>(k), "k vertex ids");
      Tuple edge;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        long long v = r.integer(toks[i]);
        if (v < 1 || v > n) throw ParseError(r.line(), toks[i].column, "vertex id out of range");
        if (!edge.empty() && v <= edge.back()) throw ParseError(r.line(), toks[i].column, "edge vertices not strictly increasing");
        edge.push_back(static_cast<Vertex>(v));
      }
      if (!prev.empty() && !(prev < edge)) {
        throw ParseError(r.line(), toks[0].column, edge == prev ? "duplicate edge" : "edges not lexicographically sorted");
      }
      g.add_edge(edge);
      prev = std::move(edge);
    }
  }
  if (!r.at_end()) throw ParseError(r.line(), 1, "trailing content after last colour");
  return system;
}

HypergraphSystem read_rhg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_rhg(in);
}

HypergraphSystem parse_rhg(const std::string& text) {
  std::istringstream in(text);
  return read_rhg(in);
}

void write_rhg(std::ostream& out, const HypergraphSystem& system) {
  out << "RHG 1\n" << system.k() << ' ' << system.n() << ' ' << system.m() << '\n';
  for (Color c = 1; c <= system.m(); ++c) {
    const auto& g = system.graph(c);
    out << "c " << c << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
      for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
      out << '\n';
    }
  }
}

std::string to_rhg(const HypergraphSystem& system) {
  std::ostringstream out;
  write_rhg(out, system);
  return out.str();
}

} // namespace rhc
