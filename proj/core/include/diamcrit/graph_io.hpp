#ifndef DIAMCRIT_GRAPH_IO_HPP
#define DIAMCRIT_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include <diamcrit/graph.hpp>

namespace diamcrit {

// graph6 encoding, bit-exact per the de-facto format specification: N(n)
// followed by the upper triangle x(i,j), 0 <= i < j < n, ordered column by
// column, packed big-endian into 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and a trailing newline.  Rejects
// anything else with ParseError carrying the byte offset.
Graph from_graph6(std::string_view bytes);

// {"n": int, "edges": [[u, v], ...]} with lexicographically sorted edges.
std::string to_json_graph(const Graph& g);
Graph from_json_graph(std::string_view text);

// File helpers; format chosen by extension (.g6 / .json).
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace diamcrit

#endif  // DIAMCRIT_GRAPH_IO_HPP
