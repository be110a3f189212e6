#include "armatch/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace armatch {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

// Splits the input into lines and hands out whitespace-separated integers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line as integers; false at end of input. Blank lines are only
  // accepted at the very end.
  bool next(std::vector<long long>& fields) {
    std::string text;
    if (!std::getline(in_, text)) return false;
    ++line_;
    fields.clear();
    std::istringstream ss(text);
    std::string token;
    while (ss >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw ParseError(line_, "not an integer: '" + token + "'");
      }
      if (used != token.size()) throw ParseError(line_, "not an integer: '" + token + "'");
      fields.push_back(v);
    }
    if (fields.empty()) {
      // Only trailing blank lines are allowed.
      std::string rest;
      while (std::getline(in_, rest)) {
        ++line_;
        if (rest.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(line_, "content after a blank line");
      }
      return false;
    }
    return true;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

void check_header(const std::vector<long long>& h, int line) {
  if (h.size() != 3) throw ParseError(line, "header must have three fields");
  if (h[0] < 1 || h[0] > kMaxVertices) throw ParseError(line, "n must be in [1, 64]");
  if (h[1] < 2 || h[1] > h[0]) throw ParseError(line, "k must be in [2, n]");
  if (h[2] < 0) throw ParseError(line, "count must be nonnegative");
}

Edge edge_from_fields(const std::vector<long long>& f, int n, int k, int line) {
  Edge e = 0;
  for (int i = 0; i < k; ++i) {
    const long long v = f[i];
    if (v < 1 || v > n) throw ParseError(line, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    if (contains_vertex(e, static_cast<int>(v))) throw ParseError(line, "repeated vertex " + std::to_string(v));
    e |= vertex_bit(static_cast<int>(v));
  }
  return e;
}

void write_edge(std::ostream& out, Edge e) {
  bool first = true;
  for (VertexSet r = e; r != 0; r &= r - 1) {
    if (!first) out << ' ';
    out << lowest_vertex(r);
    first = false;
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

}  // namespace

void write_hypergraph(std::ostream& out, const UniformHypergraph& h) {
  out << h.n() << ' ' << h.k() << ' ' << h.edge_count() << '\n';
  for (Edge e : h.edges()) {
    write_edge(out, e);
    out << '\n';
  }
}

std::string format_hypergraph(const UniformHypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

UniformHypergraph read_hypergraph(std::istream& in) {
  LineReader reader(in);
  std::vector<long long> f;
  if (!reader.next(f)) throw ParseError(1, "missing header");
  check_header(f, reader.line());
  const int n = static_cast<int>(f[0]);
  const int k = static_cast<int>(f[1]);
  const long long m = f[2];
  if (static_cast<std::uint64_t>(m) > binomial_u64(n, k)) throw ParseError(reader.line(), "more edges than C(n,k)");

  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;  // edge, line
  while (reader.next(f)) {
    if (static_cast<long long>(edges.size()) == m) throw ParseError(reader.line(), "more edge lines than the header declares");
    if (static_cast<int>(f.size()) != k) throw ParseError(reader.line(), "edge line needs exactly " + std::to_string(k) + " vertices");
    const Edge e = edge_from_fields(f, n, k, reader.line());
    edges.push_back(e);
    seen.emplace_back(e, reader.line());
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      // Report the later of the two occurrences.
      throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate edge");
    }
  }
  return UniformHypergraph(n, k, std::move(edges));
}

UniformHypergraph parse_hypergraph(const std::filesystem::path& path) {
  auto in = open(path);
  return read_hypergraph(in);
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << c.n() << ' ' << c.k() << ' ' << c.palette_size() << '\n';
  std::uint64_t rank = 0;
  for_each_subset(prefix_set(c.n()), c.k(), [&](Edge e) {
    write_edge(out, e);
    out << ' ' << c.color_at(rank++) << '\n';
  });
}

std::string format_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

EdgeColoring read_coloring(std::istream& in) {
  LineReader reader(in);
  std::vector<long long> f;
  if (!reader.next(f)) throw ParseError(1, "missing header");
  check_header(f, reader.line());
  const int n = static_cast<int>(f[0]);
  const int k = static_cast<int>(f[1]);
  const long long palette = f[2];
  const std::uint64_t total = binomial_u64(n, k);
  if (total > kMaxColoredEdges) throw ParseError(reader.line(), "colouring too large");

  std::vector<int> colors(total, -1);
  while (reader.next(f)) {
    if (static_cast<int>(f.size()) != k + 1) {
      throw ParseError(reader.line(), "colouring line needs " + std::to_string(k) + " vertices and a colour");
    }
    const Edge e = edge_from_fields(f, n, k, reader.line());
    const long long color = f[k];
    if (color < 0 || color > std::numeric_limits<int>::max()) throw ParseError(reader.line(), "colour out of range");
    int& slot = colors[colex_rank(e)];
    if (slot != -1) throw ParseError(reader.line(), "duplicate edge");
    slot = static_cast<int>(color);
  }
  const auto missing = std::find(colors.begin(), colors.end(), -1);
  if (missing != colors.end()) {
    std::uint64_t rank = 0;
    const auto want = static_cast<std::uint64_t>(missing - colors.begin());
    Edge absent = 0;
    for_each_subset(prefix_set(n), k, [&](Edge e) {
      if (rank++ == want) {
        absent = e;
        return false;
      }
      return true;
    });
    std::ostringstream msg;
    msg << "colouring is not total: no colour for edge {";
    write_edge(msg, absent);
    msg << "}";
    throw ParseError(0, msg.str());
  }
  EdgeColoring out(n, k, std::move(colors));
  if (out.palette_size() != palette) {
    throw ParseError(1, "header declares " + std::to_string(palette) + " colours, rows use " +
                            std::to_string(out.palette_size()));
  }
  return out;
}

EdgeColoring parse_coloring(const std::filesystem::path& path) {
  auto in = open(path);
  return read_coloring(in);
}

}  // namespace armatch
