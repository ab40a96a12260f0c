/**
 * Named graph fixtures used by the command-line tool and the test suite.
 *
 * Every fixture's Euler characteristic is documented here and checked
 * exactly in the tests:
 *
 *   path(n)            chi = 1
 *   cycle(n), n >= 3   chi = 0   (n >= 4 triangle-free; cycle(3) = K3 as graph)
 *   star(n)            chi = 1   (K_{1,n})
 *   tree(seed, n)      chi = 1   (random attachment tree)
 *   complete(n)        chi = 1
 *   octahedron         chi = 2
 *   icosahedron        chi = 2
 *   wheel(n), n >= 3   chi = 1   (hub joined to cycle(n))
 *   cross_polytope(d)  chi = 1 + (-1)^d   (iterated join of d+1 point pairs)
 *   figure8            chi = -1  (two 4-cycles sharing one vertex)
 *   fish               chi = 0   (octahedron and figure8 joined by a bridge edge)
 *   bipartite(n, m)    chi = n + m - n*m   (complete bipartite)
 */

#ifndef CURV_FIXTURES_HPP
#define CURV_FIXTURES_HPP

#include <string>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"
#include "curv/rng.hpp"

namespace curv {

inline Graph path_graph(int n)
{
    if (n < 1)
        throw GraphError("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

/// K_{1,n}: center 0 with n leaves.
inline Graph star_graph(int leaves)
{
    if (leaves < 1)
        throw GraphError("star needs at least one leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

inline Graph complete_graph(int n)
{
    if (n < 1)
        throw GraphError("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

/// Uniform random attachment tree on n vertices.
inline Graph random_tree(std::uint64_t seed, int n)
{
    if (n < 1)
        throw GraphError("tree needs n >= 1");
    Rng rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng.below(v)));
    return g;
}

/// Two isolated vertices (the 0-sphere).
inline Graph point_pair()
{
    return Graph(2);
}

/// (d+1)-fold join of point pairs: d = 1 gives C4, d = 2 the octahedron.
inline Graph cross_polytope(int d)
{
    if (d < 1)
        throw GraphError("cross polytope needs d >= 1");
    Graph g = point_pair();
    for (int i = 0; i < d; ++i)
        g = join(g, point_pair());
    return g;
}

inline Graph octahedron()
{
    return cross_polytope(2);
}

inline Graph icosahedron()
{
    // top 0; upper ring 1..5; lower ring 6..10; bottom 11
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 4) % 5);
    }
    return g;
}

/// Hub joined to an n-cycle rim.
inline Graph wheel_graph(int rim)
{
    if (rim < 3)
        throw GraphError("wheel needs rim >= 3");
    Graph g(rim + 1);
    for (int v = 1; v <= rim; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v % rim + 1);
    }
    return g;
}

/// Two 4-cycles sharing vertex 0; triangle-free with chi = -1.
inline Graph figure8()
{
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 0);
    return g;
}

/**
 * Octahedron body (chi = 2) and figure8 tail (chi = -1) joined by one
 * bridge edge: total chi = 0, yet constant curvature is impossible
 * because the bridge can move only one unit of negative energy toward
 * the body.
 */
inline Graph fish()
{
    Graph body = octahedron();
    Graph tail = figure8();
    const int nb = body.vertex_count();
    Graph g(nb + tail.vertex_count());
    for (auto [u, v] : body.edges())
        g.add_edge(u, v);
    for (auto [u, v] : tail.edges())
        g.add_edge(nb + u, nb + v);
    g.add_edge(0, nb); // bridge into the figure8 center
    return g;
}

inline Graph complete_bipartite(int n, int m)
{
    if (n < 1 || m < 1)
        throw GraphError("bipartite needs both sides nonempty");
    Graph g(n + m);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v)
            g.add_edge(u, n + v);
    return g;
}

/**
 * Fixture lookup by name: "octahedron", "path(4)", "tree(7,20)",
 * "bipartite(3,3)", ...  Integer arguments in parentheses.
 */
inline Graph fixture(const std::string& name)
{
    std::string head = name;
    std::vector<long long> args;
    auto open = name.find('(');
    if (open != std::string::npos) {
        if (name.back() != ')')
            throw ParseError("malformed fixture name: " + name);
        head = name.substr(0, open);
        std::string inner = name.substr(open + 1, name.size() - open - 2);
        std::size_t start = 0;
        while (start <= inner.size() && !inner.empty()) {
            auto comma = inner.find(',', start);
            std::string token = inner.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                args.push_back(std::stoll(token));
            } catch (const std::exception&) {
                throw ParseError("bad fixture argument \"" + token + "\" in " + name);
            }
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }

    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw ParseError("fixture " + head + " expects " + std::to_string(count) +
                             " argument(s)");
    };
    if (head == "path") {
        want(1);
        return path_graph(static_cast<int>(args[0]));
    }
    if (head == "cycle") {
        want(1);
        return cycle_graph(static_cast<int>(args[0]));
    }
    if (head == "star") {
        want(1);
        return star_graph(static_cast<int>(args[0]));
    }
    if (head == "tree") {
        want(2);
        return random_tree(static_cast<std::uint64_t>(args[0]), static_cast<int>(args[1]));
    }
    if (head == "complete") {
        want(1);
        return complete_graph(static_cast<int>(args[0]));
    }
    if (head == "octahedron") {
        want(0);
        return octahedron();
    }
    if (head == "icosahedron") {
        want(0);
        return icosahedron();
    }
    if (head == "wheel") {
        want(1);
        return wheel_graph(static_cast<int>(args[0]));
    }
    if (head == "cross_polytope") {
        want(1);
        return cross_polytope(static_cast<int>(args[0]));
    }
    if (head == "figure8") {
        want(0);
        return figure8();
    }
    if (head == "fish") {
        want(0);
        return fish();
    }
    if (head == "bipartite") {
        want(2);
        return complete_bipartite(static_cast<int>(args[0]), static_cast<int>(args[1]));
    }
    throw ParseError("unknown fixture: " + name);
}

} // namespace curv

#endif
