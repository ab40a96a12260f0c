/**
 * Finite simple graphs over dense vertex ids 0..n-1.
 *
 * Original labels from parsed input are kept in a side table so matrix
 * column indexing stays stable downstream.  Graphs are immutable once
 * built; all mutating steps happen through the builder-style add_edge
 * before first use.
 */

#ifndef CURV_GRAPH_HPP
#define CURV_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace curv {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count) { resize(vertex_count); }

    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    {
        resize(vertex_count);
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    void resize(int vertex_count)
    {
        if (vertex_count < 0)
            throw GraphError("negative vertex count");
        adjacency_.resize(vertex_count);
    }

    void add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw GraphError("edge endpoint " + std::to_string(std::max(u, v)) +
                             " is not a declared vertex");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw GraphError("duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
        ++edge_count_;
    }

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const
    {
        return u >= 0 && u < vertex_count() && adjacency_[u].count(v) > 0;
    }

    const std::set<int>& neighbors(int v) const
    {
        check_vertex(v);
        return adjacency_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> result;
        result.reserve(edge_count_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adjacency_[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    /// Optional original vertex labels (parallel to ids); empty if none.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels)
    {
        if (static_cast<int>(labels.size()) != vertex_count())
            throw GraphError("label table size mismatch");
        labels_ = std::move(labels);
    }
    std::string label(int v) const
    {
        check_vertex(v);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= vertex_count())
            throw GraphError("unknown vertex " + std::to_string(v));
    }

    std::vector<std::set<int>> adjacency_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

/// Component ids (0-based, in order of first appearance by vertex id).
inline std::vector<int> connected_components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> component(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (component[root] >= 0)
            continue;
        component[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (component[v] < 0) {
                    component[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return component;
}

/**
 * One-dimensional Betti numbers of the 1-skeleton:
 * b0 = number of connected components, b1 = |E| - |V| + b0.
 */
inline std::pair<int, int> betti_1d(const Graph& g)
{
    const auto component = connected_components(g);
    int b0 = component.empty() ? 0 : 1 + *std::max_element(component.begin(), component.end());
    int b1 = g.edge_count() - g.vertex_count() + b0;
    return {b0, b1};
}

inline bool is_tree(const Graph& g)
{
    auto [b0, b1] = betti_1d(g);
    return b0 == 1 && b1 == 0;
}

inline bool is_connected(const Graph& g)
{
    return g.vertex_count() == 0 || betti_1d(g).first == 1;
}

/**
 * Join of two graphs: disjoint union plus all cross edges.  Vertices of g2
 * are relabeled to follow those of g1.
 */
inline Graph join(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    Graph result(n1 + n2);
    for (auto [u, v] : g1.edges())
        result.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        result.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            result.add_edge(u, n1 + v);
    return result;
}

namespace detail {

/// True iff g restricted to `vertices` is a single cycle through all of them.
inline bool induces_single_cycle(const Graph& g, const std::vector<int>& vertices)
{
    const int k = static_cast<int>(vertices.size());
    if (k < 3)
        return false;
    std::set<int> members(vertices.begin(), vertices.end());
    for (int v : vertices) {
        int deg = 0;
        for (int u : g.neighbors(v))
            if (members.count(u))
                ++deg;
        if (deg != 2)
            return false;
    }
    // degree-2 everywhere: connected <=> single cycle
    std::set<int> seen;
    std::vector<int> stack{vertices.front()};
    seen.insert(vertices.front());
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (members.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return static_cast<int>(seen.size()) == k;
}

} // namespace detail

/**
 * A 2-graph is a graph in which every unit sphere (neighbor-induced
 * subgraph) is a single cycle with at least 4 vertices: a discrete
 * 2-manifold.
 */
inline bool is_two_graph(const Graph& g)
{
    if (g.vertex_count() == 0)
        return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
        if (nb.size() < 4 || !detail::induces_single_cycle(g, nb))
            return false;
    }
    return true;
}

} // namespace curv

#endif
