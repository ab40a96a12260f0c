/**
 * Abstract simplicial complexes and clique (Whitney) complexes of graphs.
 *
 * A complex stores every simplex explicitly, grouped by dimension, with a
 * hash index for membership queries and a per-vertex star index for the
 * curvature computations.  Complexes are immutable after construction.
 */

#ifndef CURV_COMPLEX_HPP
#define CURV_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "curv/graph.hpp"
#include "curv/rational.hpp"

namespace curv {

/// Nonempty strictly increasing vertex list; dim = |vertices| - 1.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<int> v) : vertices(std::move(v))
    {
        if (vertices.empty())
            throw GraphError("empty simplex");
        if (!std::is_sorted(vertices.begin(), vertices.end()) ||
            std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
            throw GraphError("simplex vertex list must be strictly increasing");
    }

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(int v) const
    {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool operator==(const Simplex& other) const = default;
};

/// Alternating weight omega(x) = (-1)^dim(x).
inline int omega(const Simplex& x) { return x.dim() % 2 == 0 ? 1 : -1; }

namespace detail {

struct VertexListHash {
    std::size_t operator()(const std::vector<int>& v) const
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b9ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace detail

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /**
     * Build from a list of simplices (as sorted vertex lists).  The input is
     * closed downward; singletons are always included for every mentioned
     * vertex.
     */
    static SimplicialComplex from_simplices(const std::vector<std::vector<int>>& simplices,
                                            std::size_t simplex_cap = kDefaultSimplexCap)
    {
        std::unordered_map<std::vector<int>, char, detail::VertexListHash> seen;
        std::vector<std::vector<int>> all;
        for (const auto& s : simplices)
            detail_close_downward(s, seen, all, simplex_cap);
        return SimplicialComplex(std::move(all));
    }

    int size() const { return static_cast<int>(simplices_.size()); }
    int dim() const
    {
        return simplices_.empty() ? -1 : simplices_.back().dim();
    }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(int id) const { return simplices_[id]; }

    bool contains(const std::vector<int>& vertex_list) const
    {
        return index_.count(vertex_list) > 0;
    }
    /// Simplex id, or -1 if absent.
    int id_of(const std::vector<int>& vertex_list) const
    {
        auto it = index_.find(vertex_list);
        return it == index_.end() ? -1 : it->second;
    }

    /// Ids of all simplices containing vertex v (its closed star).
    const std::vector<int>& star(int v) const
    {
        auto it = star_.find(v);
        if (it == star_.end())
            throw GraphError("unknown vertex " + std::to_string(v));
        return it->second;
    }

    bool has_vertex(int v) const { return star_.count(v) > 0; }

    /// counts[k] = number of k-dimensional simplices.
    std::vector<long long> f_vector() const
    {
        std::vector<long long> counts(static_cast<std::size_t>(std::max(dim() + 1, 0)), 0);
        for (const auto& s : simplices_)
            ++counts[s.dim()];
        return counts;
    }

    /// Maximal simplices (those not a face of any other member).
    std::vector<Simplex> facets() const
    {
        std::vector<Simplex> result;
        for (const auto& s : simplices_) {
            bool maximal = true;
            // s is non-maximal iff some coface s + {w} is a member
            for (int w : vertices_) {
                if (s.contains(w))
                    continue;
                std::vector<int> extended = s.vertices;
                extended.insert(std::upper_bound(extended.begin(), extended.end(), w), w);
                if (contains(extended)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal)
                result.push_back(s);
        }
        return result;
    }

    static constexpr std::size_t kDefaultSimplexCap = 10'000'000;

private:
    explicit SimplicialComplex(std::vector<std::vector<int>> all)
    {
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        simplices_.reserve(all.size());
        for (auto& v : all) {
            index_.emplace(v, static_cast<int>(simplices_.size()));
            simplices_.emplace_back(Simplex(std::move(v)));
        }
        for (int id = 0; id < size(); ++id)
            for (int v : simplices_[id].vertices)
                star_[v].push_back(id);
        for (const auto& s : simplices_)
            if (s.dim() == 0)
                vertices_.push_back(s.vertices[0]);
    }

    static void detail_close_downward(
        const std::vector<int>& simplex,
        std::unordered_map<std::vector<int>, char, detail::VertexListHash>& seen,
        std::vector<std::vector<int>>& out, std::size_t cap)
    {
        if (!std::is_sorted(simplex.begin(), simplex.end()) ||
            std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
            throw GraphError("simplex vertex list must be strictly increasing");
        const int k = static_cast<int>(simplex.size());
        if (k == 0)
            throw GraphError("empty simplex");
        if (k >= 63)
            throw ResourceLimitError("simplex too large to close downward");
        for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < k; ++i)
                if (mask & (1ULL << i))
                    subset.push_back(simplex[i]);
            if (seen.emplace(subset, 1).second) {
                out.push_back(std::move(subset));
                if (out.size() > cap)
                    throw ResourceLimitError("simplex count exceeds cap");
            }
        }
    }

    std::vector<Simplex> simplices_; // sorted by (dim, lex); id = position
    std::vector<int> vertices_;
    std::unordered_map<std::vector<int>, int, detail::VertexListHash> index_;
    std::unordered_map<int, std::vector<int>> star_;
};

namespace detail {

/// Bron-Kerbosch with pivoting; reports each maximal clique once.
template <typename Report>
void bron_kerbosch(const Graph& g, std::vector<int>& current, std::vector<int> candidates,
                   std::vector<int> excluded, Report&& report)
{
    if (candidates.empty() && excluded.empty()) {
        report(current);
        return;
    }
    // pivot: vertex of P u X with most neighbors in P
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* pool : {&candidates, &excluded}) {
        for (int u : *pool) {
            std::size_t count = 0;
            for (int v : candidates)
                if (g.has_edge(u, v))
                    ++count;
            if (pivot < 0 || count > best) {
                pivot = u;
                best = count;
            }
        }
    }
    std::vector<int> branch;
    for (int v : candidates)
        if (pivot < 0 || !g.has_edge(pivot, v))
            branch.push_back(v);
    for (int v : branch) {
        std::vector<int> next_candidates, next_excluded;
        for (int u : candidates)
            if (g.has_edge(u, v))
                next_candidates.push_back(u);
        for (int u : excluded)
            if (g.has_edge(u, v))
                next_excluded.push_back(u);
        current.push_back(v);
        bron_kerbosch(g, current, std::move(next_candidates), std::move(next_excluded),
                      report);
        current.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.push_back(v);
    }
}

} // namespace detail

/// All maximal cliques of g, each as a sorted vertex list.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g)
{
    std::vector<std::vector<int>> result;
    std::vector<int> current, candidates(g.vertex_count());
    std::iota(candidates.begin(), candidates.end(), 0);
    detail::bron_kerbosch(g, current, std::move(candidates), {},
                          [&](const std::vector<int>& clique) {
                              if (clique.empty())
                                  return; // vertexless graph
                              std::vector<int> sorted = clique;
                              std::sort(sorted.begin(), sorted.end());
                              result.push_back(std::move(sorted));
                          });
    return result;
}

/**
 * Whitney (clique) complex of a graph: all vertex subsets inducing complete
 * subgraphs, found by expanding maximal cliques downward.  With max_dim the
 * complex is truncated to the given skeleton.
 */
inline SimplicialComplex build_clique_complex(
    const Graph& g, std::optional<int> max_dim = std::nullopt,
    std::size_t simplex_cap = SimplicialComplex::kDefaultSimplexCap)
{
    if (max_dim && *max_dim < 0)
        throw GraphError("max_dim must be nonnegative");
    std::vector<std::vector<int>> generators;
    for (auto& clique : maximal_cliques(g)) {
        if (max_dim && static_cast<int>(clique.size()) > *max_dim + 1) {
            // feed the truncated skeleton instead of the full clique
            const int k = *max_dim + 1;
            std::vector<int> choose(k);
            std::vector<int> stack;
            // enumerate k-subsets of the clique
            std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
                if (depth == k) {
                    generators.emplace_back(stack);
                    return;
                }
                for (std::size_t i = start; i < clique.size(); ++i) {
                    stack.push_back(clique[i]);
                    rec(i + 1, depth + 1);
                    stack.pop_back();
                }
            };
            rec(0, 0);
        } else {
            generators.push_back(std::move(clique));
        }
    }
    return SimplicialComplex::from_simplices(generators, simplex_cap);
}

/// Euler characteristic chi = sum over simplices of omega(x), exact.
inline Rational euler_characteristic(const SimplicialComplex& c)
{
    long long chi = 0;
    for (const auto& s : c.simplices())
        chi += omega(s);
    return Rational(chi);
}

/**
 * Unit sphere S(v): all simplices x with v not in x and x u {v} in the
 * complex.  For clique complexes this is the clique complex induced on the
 * neighbors of v.
 */
inline SimplicialComplex unit_sphere(const SimplicialComplex& c, int v)
{
    if (!c.has_vertex(v))
        throw GraphError("unknown vertex " + std::to_string(v));
    std::vector<std::vector<int>> members;
    for (int id : c.star(v)) {
        const Simplex& x = c.simplex(id);
        if (x.dim() == 0)
            continue;
        std::vector<int> stripped;
        stripped.reserve(x.vertices.size() - 1);
        for (int u : x.vertices)
            if (u != v)
                stripped.push_back(u);
        members.push_back(std::move(stripped));
    }
    return SimplicialComplex::from_simplices(members);
}

} // namespace curv

#endif
