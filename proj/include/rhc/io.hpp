#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rhc/hypergraph.hpp"

namespace rhc {

// Malformed input, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// "RHG 1" instance files:
//   RHG 1
//   <k> <n> <m>
//   c <i> <edge-count>     (for i = 1..m, in order)
//   <k sorted vertex ids>  (edge-count lines, lexicographically sorted)
HypergraphSystem read_rhg(std::istream& in);
HypergraphSystem read_rhg_file(const std::string& path);
HypergraphSystem parse_rhg(const std::string& text);

void write_rhg(std::ostream& out, const HypergraphSystem& system);
std::string to_rhg(const HypergraphSystem& system);

} // namespace rhc
