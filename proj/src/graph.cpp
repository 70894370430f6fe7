#include "corona/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "corona/errors.hpp"

namespace corona {

const char* matrix_kind_name(MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return "adjacency";
        case MatrixKind::laplacian: return "laplacian";
        case MatrixKind::signless_laplacian: return "signless";
    }
    return "?";
}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
    if (order < 0) fail(errc::out_of_range, "negative graph order");
    for (auto& [u, v] : edges) {
        if (u == v) fail(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= order || v >= order)
            fail(errc::out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds order " + std::to_string(order));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(order_), 0);
    for (const auto& [u, v] : edges_) {
        ++d[static_cast<std::size_t>(u)];
        ++d[static_cast<std::size_t>(v)];
    }
    return d;
}

std::vector<std::vector<int>> Graph::adjacency_list() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(order_));
    for (const auto& [u, v] : edges_) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

Graph build_graph(int order, const std::vector<Graph::Edge>& edges) { return Graph(order, edges); }

IntMatrix matrix_of(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    IntMatrix m(n, n);
    for (const auto& [u, v] : g.edges()) {
        switch (kind) {
            case MatrixKind::adjacency:
                m(u, v) = 1;
                m(v, u) = 1;
                break;
            case MatrixKind::laplacian:
                m(u, v) = -1;
                m(v, u) = -1;
                m(u, u) += 1;
                m(v, v) += 1;
                break;
            case MatrixKind::signless_laplacian:
                m(u, v) = 1;
                m(v, u) = 1;
                m(u, u) += 1;
                m(v, v) += 1;
                break;
        }
    }
    return m;
}

RegularityComponents regularity_and_components(const Graph& g) {
    RegularityComponents rc;
    const int n = g.order();
    if (n == 0) return rc;
    std::vector<int> deg = g.degrees();
    if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg[0]; })) rc.regular_degree = deg[0];

    auto adj = g.adjacency_list();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++rc.component_count;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
    }
    return rc;
}

Graph path_graph(int n) {
    if (n < 1) fail(errc::bad_family_params, "path needs n >= 1");
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) fail(errc::bad_family_params, "cycle needs n >= 3");
    std::vector<Graph::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    if (n < 1) fail(errc::bad_family_params, "complete needs n >= 1");
    std::vector<Graph::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) fail(errc::bad_family_params, "complete bipartite needs parts >= 1");
    std::vector<Graph::Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

Graph star_graph(int leaves) {
    if (leaves < 1) fail(errc::bad_family_params, "star needs >= 1 leaf");
    return complete_bipartite_graph(1, leaves);
}

Graph circulant_graph(int n, std::vector<int> jumps) {
    if (n < 1) fail(errc::bad_family_params, "circulant needs n >= 1");
    std::sort(jumps.begin(), jumps.end());
    jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
    std::vector<Graph::Edge> e;
    for (int s : jumps) {
        if (s < 1 || 2 * s > n) fail(errc::bad_family_params, "circulant jump " + std::to_string(s) + " outside 1..n/2");
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + s) % n);
    }
    return Graph(n, std::move(e));
}

Graph petersen_graph() {
    std::vector<Graph::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(e));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Graph::Edge> e = a.edges();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(e));
}

namespace {

int parse_int(const std::string& s) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(errc::bad_family_params, "not an integer: '" + s + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

Graph family_from_spec(const std::string& spec) {
    std::vector<std::string> parts = split(spec, ':');
    const std::string& name = parts[0];
    auto arity = [&](std::size_t k) {
        if (parts.size() != k + 1)
            fail(errc::bad_family_params, "family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "path") {
        arity(1);
        return path_graph(parse_int(parts[1]));
    }
    if (name == "cycle") {
        arity(1);
        return cycle_graph(parse_int(parts[1]));
    }
    if (name == "complete") {
        arity(1);
        return complete_graph(parse_int(parts[1]));
    }
    if (name == "complete_bipartite" || name == "biclique") {
        arity(2);
        return complete_bipartite_graph(parse_int(parts[1]), parse_int(parts[2]));
    }
    if (name == "star") {
        arity(1);
        return star_graph(parse_int(parts[1]));
    }
    if (name == "circulant") {
        arity(2);
        std::vector<int> jumps;
        for (const std::string& j : split(parts[2], ',')) jumps.push_back(parse_int(j));
        return circulant_graph(parse_int(parts[1]), std::move(jumps));
    }
    if (name == "petersen") {
        arity(0);
        return petersen_graph();
    }
    fail(errc::bad_family_params, "unknown family '" + name + "'");
}

}  // namespace

Graph graph_from_spec(const std::string& spec) {
    std::vector<std::string> parts = split(spec, '+');
    Graph g = family_from_spec(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, family_from_spec(parts[i]));
    return g;
}

}  // namespace corona
