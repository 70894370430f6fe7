#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corona/matrix.hpp"

namespace corona {

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

const char* matrix_kind_name(MatrixKind kind);

/**
 * Simple undirected finite graph with dense 0-based vertex labels.
 *
 * Edges are stored as unordered pairs (u, v) with u < v, sorted
 * lexicographically and deduplicated. Immutable after construction.
 */
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;
    /// Validates, orients (u < v), sorts and deduplicates the edge list.
    /// Throws OutOfRange / LoopEdge on bad endpoints.
    Graph(int order, std::vector<Edge> edges);

    int order() const { return order_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_list() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
};

Graph build_graph(int order, const std::vector<Graph::Edge>& edges);

IntMatrix matrix_of(const Graph& g, MatrixKind kind);

struct RegularityComponents {
    std::optional<int> regular_degree;  // present iff all degrees equal
    int component_count = 0;
};

RegularityComponents regularity_and_components(const Graph& g);

// Standard families. Each uses its conventional deterministic labeling.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);  // K_{1,n}: center 0, leaves 1..n
Graph circulant_graph(int n, std::vector<int> jumps);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

/**
 * Parse a family spec string: "path:4", "cycle:5", "complete:3",
 * "complete_bipartite:2:3" (alias "biclique"), "star:4",
 * "circulant:9:1,2", "petersen". "+" joins specs into a disjoint union,
 * e.g. "cycle:4+complete:1". Throws BadFamilyParams.
 */
Graph graph_from_spec(const std::string& spec);

}  // namespace corona
