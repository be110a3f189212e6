#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "armatch/coloring.hpp"
#include "armatch/hypergraph.hpp"

namespace armatch {

/// Malformed input; line() is 1-based, 0 when the problem is not tied to a
/// line (for example a missing row).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Hypergraph format: "n k m", then m lines of k vertex ids, ascending and
// 1-based, edges in colex order.
void write_hypergraph(std::ostream& out, const UniformHypergraph& h);
std::string format_hypergraph(const UniformHypergraph& h);
UniformHypergraph read_hypergraph(std::istream& in);
UniformHypergraph parse_hypergraph(const std::filesystem::path& path);

// Colouring format: "n k c" with c the palette size, then C(n,k) lines
// "v1 ... vk colour" in colex edge order.
void write_coloring(std::ostream& out, const EdgeColoring& c);
std::string format_coloring(const EdgeColoring& c);
EdgeColoring read_coloring(std::istream& in);
EdgeColoring parse_coloring(const std::filesystem::path& path);

}  // namespace armatch
