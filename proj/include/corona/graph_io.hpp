#pragma once

#include <string>
#include <string_view>

#include "corona/graph.hpp"

namespace corona {

enum class GraphFormat { edge_list, graph6, dot };

/// Decode one graph6 line (short or long header form). Throws MalformedGraph6.
Graph parse_graph6(std::string_view text);

/// Edge-list text: first line "n m", then m lines "u v" with u < v,
/// sorted lexicographically. Throws MalformedEdgeList.
Graph parse_edge_list(std::string_view text);

/// Serialize. edge_list and graph6 round-trip through their parsers;
/// dot output is one-way.
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace corona
