#include "atlas/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "atlas/error.hpp"

namespace atlas {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() || tok.empty() || tok.front() == '-') {
    throw InvalidInput("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
  }
  return static_cast<std::size_t>(value);
}

WeightedGraph read_dimacs(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  std::size_t n = 0;
  bool have_header = false;
  std::map<std::pair<std::size_t, std::size_t>, Rational> arcs;
  for (const auto& [line_no, line] : lines) {
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (tok.size() != 4) throw InvalidInput("line " + std::to_string(line_no) + ": malformed DIMACS header");
      n = parse_count(tok[2], line_no);
      have_header = true;
      continue;
    }
    if (tok[0] != "a" || tok.size() != 4) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected 'a u v w'");
    }
    if (!have_header) throw InvalidInput("DIMACS arc before 'p sp n m' header");
    std::size_t u = parse_count(tok[1], line_no);
    std::size_t v = parse_count(tok[2], line_no);
    if (u == 0 || v == 0 || u > n || v > n) {
      throw InvalidInput("line " + std::to_string(line_no) + ": DIMACS vertex out of range 1.." + std::to_string(n));
    }
    if (u == v) throw InvalidInput("line " + std::to_string(line_no) + ": self-loop");
    Rational w = parse_rational(tok[3]);
    auto key = std::make_pair(std::min(u, v) - 1, std::max(u, v) - 1);
    auto [it, inserted] = arcs.emplace(key, w);
    if (!inserted && it->second != w) {
      throw InvalidInput("line " + std::to_string(line_no) + ": inconsistent weights on arc pair {" +
                         std::to_string(u) + "," + std::to_string(v) + "}");
    }
  }
  if (!have_header) throw InvalidInput("missing DIMACS header");
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const auto& [key, w] : arcs) edges.push_back({key.first, key.second, w});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph read_native(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  std::size_t idx = 0;
  while (idx < lines.size() && tokens(lines[idx].second).empty()) ++idx;
  if (idx == lines.size()) throw InvalidInput("empty graph file");
  auto header = tokens(lines[idx].second);
  if (header.size() != 2) throw InvalidInput("line " + std::to_string(lines[idx].first) + ": expected 'n m'");
  const std::size_t n = parse_count(header[0], lines[idx].first);
  const std::size_t m = parse_count(header[1], lines[idx].first);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (++idx; idx < lines.size(); ++idx) {
    auto tok = tokens(lines[idx].second);
    if (tok.empty()) continue;
    const std::size_t line_no = lines[idx].first;
    if (tok.size() != 3) throw InvalidInput("line " + std::to_string(line_no) + ": expected 'u v w'");
    edges.push_back({parse_count(tok[0], line_no), parse_count(tok[1], line_no), parse_rational(tok[2])});
  }
  if (edges.size() != m) {
    throw InvalidInput("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  bool dimacs = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = tokens(line);
    if (!tok.empty() && tok[0].front() == '#') continue;
    if (!tok.empty() && (tok[0] == "p" || tok[0] == "a" || tok[0] == "c")) dimacs = true;
    lines.emplace_back(line_no, std::move(line));
  }
  return dimacs ? read_dimacs(lines) : read_native(lines);
}

WeightedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream ss(comment);
    for (std::string line; std::getline(ss, line);) out << "# " << line << '\n';
  }
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << to_string(e.weight) << '\n';
}

std::string format_graph(const WeightedGraph& g, const std::string& comment) {
  std::ostringstream out;
  write_graph(out, g, comment);
  return out.str();
}

}  // namespace atlas
