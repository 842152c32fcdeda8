#ifndef QCONTEXT_GRAPH_IO_HPP
#define QCONTEXT_GRAPH_IO_HPP

#include <string>

#include "qcontext/graph.hpp"

namespace qcontext {

// JSON form: {"vertices": [labels], "edges": [[label,label], ...]}.
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);

// DIMACS-like form: optional "c" comments, one "p edge n m" header, then m
// lines "e i j" with 1-based endpoints. Vertices are labeled "1".."n".
Graph graph_from_dimacs(const std::string& text);
std::string graph_to_dimacs(const Graph& g);

// Sniffs the format: first non-space byte '{' selects JSON, else DIMACS.
Graph parse_graph(const std::string& text);

Graph load_graph_file(const std::string& path);

}  // namespace qcontext

#endif
