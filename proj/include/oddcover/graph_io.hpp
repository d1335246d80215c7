#pragma once

// graph6 and edge-list serialisation. Parse errors carry the byte offset of
// the offending character.

#include <string>
#include <string_view>

#include "oddcover/graph.hpp"

namespace oddcover {

// One graph6 line; an optional ">>graph6<<" prefix and trailing newline are
// accepted. sparse6 and digraph6 inputs are rejected.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Whitespace-separated "u v" pairs, 1-based, one edge per line. An optional
// first line "n <count>" fixes the vertex count; otherwise it is the largest
// endpoint. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6 if the first token decodes as graph6, else an edge list.
Graph parse_graph_auto(std::string_view text);

}  // namespace oddcover
