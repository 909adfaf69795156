#pragma once

#include <string>
#include <string_view>

#include "wordrep/graph.hpp"

namespace wordrep {

/// `{"nodes": [...], "edges": [[u, v], ...]}` with sorted nodes and the
/// canonical edge list. Compact unless `indent` >= 0.
std::string graph_to_json(const Graph& graph, int indent = -1);

/// Parses the JSON form. Node names may be strings or integers. Throws
/// ParseError on malformed input, InvalidArgument on an invalid graph.
Graph graph_from_json(std::string_view text);

/// One `u v` pair per line; `node u` declares an isolated node. Blank lines
/// and lines starting with '#' are skipped.
Graph graph_from_edge_list(std::string_view text);
std::string graph_to_edge_list(const Graph& graph);

/// JSON if the first non-blank character is '{', edge list otherwise.
Graph read_graph(std::string_view text);

}  // namespace wordrep
