#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "atlas/graph.hpp"

namespace atlas {

// Reads either the native edge-list format
//
//   # optional comment lines
//   n m
//   u v w        (m lines, 0-based ids, w decimal or p/q)
//
// or DIMACS shortest-path style ("c" comments, "p sp n m", "a u v w" with
// 1-based ids). DIMACS arc pairs (u,v)/(v,u) collapse into one undirected edge;
// inconsistent weights on such a pair are rejected.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph_file(const std::filesystem::path& path);

// Writes the native format; weights use the canonical p/q spelling.
void write_graph(std::ostream& out, const WeightedGraph& g, const std::string& comment = {});
std::string format_graph(const WeightedGraph& g, const std::string& comment = {});

}  // namespace atlas
