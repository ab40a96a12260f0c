/**
 * Shared test helpers: random instance generators and independent oracles.
 * Everything here stays independent of the implementation paths it checks:
 * the LP oracle enumerates basic solutions, the variance oracle runs
 * projected gradient descent, curvature sums are recomputed from scratch.
 */

#ifndef CURV_TESTS_SUPPORT_HPP
#define CURV_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "curv/curv.hpp"

namespace curv::testing {

inline Graph random_graph(Rng& rng, int n, double p)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

inline Graph random_connected_graph(Rng& rng, int n, double extra_edge_p)
{
    Graph g = random_tree(rng.next_u64(), n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng.bernoulli(extra_edge_p))
                g.add_edge(u, v);
    return g;
}

/// Leafless triangle-free graph grown from a cycle by adding ears.
inline Graph random_ear_graph(Rng& rng, int target_n)
{
    const int base = rng.uniform_int(4, std::max(4, std::min(8, target_n)));
    std::vector<std::pair<int, int>> edges;
    std::vector<std::set<int>> adj(base);
    int n = base;
    auto connect = [&](int a, int b) {
        edges.emplace_back(a, b);
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (int i = 0; i < base; ++i)
        connect(i, (i + 1) % base);

    int attempts = 0;
    while (n < target_n && attempts < 200) {
        ++attempts;
        const int u = rng.uniform_int(0, n - 1);
        const int v = rng.uniform_int(0, n - 1);
        if (u == v)
            continue;
        const int k = rng.uniform_int(0, std::min(4, target_n - n));
        if (k == 0) {
            // direct chord; keep it triangle-free
            if (adj[u].count(v))
                continue;
            bool common = false;
            for (int w : adj[u])
                if (adj[w].count(v))
                    common = true;
            if (common)
                continue;
            connect(u, v);
        } else {
            if (k == 1 && adj[u].count(v))
                continue; // would close a triangle
            int prev = u;
            for (int i = 0; i < k; ++i) {
                adj.emplace_back();
                connect(prev, n);
                prev = n++;
            }
            connect(prev, v);
        }
    }
    Graph g(n);
    for (auto [a, b] : edges)
        g.add_edge(a, b);
    return g;
}

/**
 * True iff some family solves the constant-curvature system with every
 * share strictly positive.  Independent test-side construction: maximize t
 * over families satisfying the system with all shares >= t, via q = p - t.
 */
inline bool has_strictly_positive_solution(const SimplicialComplex& c)
{
    auto sys = assemble(c);
    const int nv = sys.num_vars();
    if (nv == 0)
        return solve(sys.lp).status == LPStatus::Feasible;
    LPProblem lifted;
    lifted.num_vars = nv + 2;
    for (std::size_t i = 0; i < sys.lp.rows.size(); ++i) {
        std::vector<Rational> row = sys.lp.rows[i];
        Rational t_coeff = 0;
        for (int j = 0; j < nv; ++j)
            t_coeff += row[j];
        row.push_back(t_coeff);
        row.push_back(-t_coeff);
        lifted.add_equality(std::move(row), sys.lp.rhs[i]);
    }
    std::vector<Rational> objective(nv + 2, Rational(0));
    objective[nv] = 1;
    objective[nv + 1] = -1;
    lifted.objective = std::move(objective);
    auto outcome = solve(lifted);
    return outcome.status == LPStatus::Optimal && *outcome.objective_value > 0;
}

/**
 * Random connected triangle-free graph admitting a strictly positive
 * constant-curvature family -- the regime where the solution set provably
 * has affine dimension b1.  Graphs whose solution set is empty (a leaf
 * next to a negative target, or a flow-condition violation) or pinned to
 * the boundary (tight flow condition) are counted and resampled; both are
 * genuine properties of those instances, not generator bugs.
 */
inline Graph random_strict_triangle_free(Rng& rng, int max_n, int* infeasible = nullptr,
                                         int* boundary = nullptr)
{
    for (;;) {
        Graph g;
        switch (rng.uniform_int(0, 2)) {
        case 0:
            g = random_tree(rng.next_u64(), rng.uniform_int(4, max_n));
            break;
        case 1: {
            // unicyclic: a tree plus one triangle-avoiding edge
            const int n = rng.uniform_int(4, max_n);
            g = random_tree(rng.next_u64(), n);
            for (int tries = 0; tries < 100; ++tries) {
                int u = rng.uniform_int(0, n - 1);
                int v = rng.uniform_int(0, n - 1);
                if (u == v || g.has_edge(u, v))
                    continue;
                bool common = false;
                for (int w : g.neighbors(u))
                    if (g.has_edge(w, v))
                        common = true;
                if (common)
                    continue;
                g.add_edge(u, v);
                break;
            }
            break;
        }
        default:
            g = random_ear_graph(rng, rng.uniform_int(6, max_n));
            break;
        }
        if (!is_connected(g))
            continue;
        auto c = build_clique_complex(g);
        if (!solve_constant(c).feasible) {
            if (infeasible)
                ++*infeasible;
            continue;
        }
        if (!has_strictly_positive_solution(c)) {
            if (boundary)
                ++*boundary;
            continue;
        }
        return g;
    }
}

/// Random rational in [0,1] with small denominator.
inline Rational random_unit_rational(Rng& rng, int max_den = 12)
{
    int den = rng.uniform_int(1, max_den);
    int num = rng.uniform_int(0, den);
    return Rational(num, den);
}

inline DistributionFamily random_family(Rng& rng, const SimplicialComplex& c)
{
    DistributionFamily family;
    family.resize(c);
    for (int id = 0; id < c.size(); ++id) {
        auto& p = family.at(id);
        const int k = static_cast<int>(p.size());
        // random integer weights normalized exactly
        std::vector<int> w(k);
        int total = 0;
        for (int i = 0; i < k; ++i) {
            w[i] = rng.uniform_int(0, 6);
            total += w[i];
        }
        if (total == 0) {
            w[rng.uniform_int(0, k - 1)] = 1;
            total = 1;
        }
        for (int i = 0; i < k; ++i)
            p[i] = Rational(w[i], total);
    }
    return family;
}

inline EnergyFunction random_energy(Rng& rng, const SimplicialComplex& c, int span = 3)
{
    EnergyFunction h;
    for (const auto& x : c.simplices()) {
        int num = rng.uniform_int(-span, span);
        int den = rng.uniform_int(1, 4);
        h.set(x.vertices, Rational(num, den));
    }
    return h;
}

// ---------------------------------------------------------------------------
// Brute-force LP oracle: enumerate basic solutions of {Ax = b, x >= 0}.
// Only meaningful for small instances whose feasible set is bounded (the
// generators below always include a simplex-style capping row).
// ---------------------------------------------------------------------------

struct LPOracleResult {
    bool feasible = false;
    std::optional<Rational> best_objective; // max over basic feasible solutions
};

namespace oracle_detail {

/// Solve the square rational system M z = r; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                         std::vector<Rational> r)
{
    const int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!m[i][col].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(r[col], r[pivot]);
        const Rational inv = 1 / m[col][col];
        for (int j = col; j < n; ++j)
            m[col][j] *= inv;
        r[col] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col].is_zero())
                continue;
            const Rational f = m[i][col];
            for (int j = col; j < n; ++j)
                m[i][j] -= f * m[col][j];
            r[i] -= f * r[col];
        }
    }
    return r;
}

} // namespace oracle_detail

/**
 * Enumerate all column subsets of size rank(A); every basic feasible
 * solution of a nonempty pointed polyhedron appears among them.
 */
inline LPOracleResult lp_oracle(const LPProblem& p)
{
    const int m_rows = static_cast<int>(p.rows.size());
    const int n = p.num_vars;

    LPOracleResult result;
    const int r = rank(p.rows);

    // select r independent rows (first maximal independent subset)
    std::vector<int> row_ids;
    std::vector<std::vector<Rational>> chosen;
    for (int i = 0; i < m_rows && static_cast<int>(row_ids.size()) < r; ++i) {
        chosen.push_back(p.rows[i]);
        if (rank(chosen) == static_cast<int>(row_ids.size()) + 1)
            row_ids.push_back(i);
        else
            chosen.pop_back();
    }
    // consistency: rank of [A|b] must match, else infeasible as linear system
    {
        std::vector<std::vector<Rational>> augmented;
        for (int i = 0; i < m_rows; ++i) {
            augmented.push_back(p.rows[i]);
            augmented.back().push_back(p.rhs[i]);
        }
        if (rank(augmented) != r)
            return result; // infeasible
    }

    std::vector<int> combo(r);
    std::function<void(int, int)> recurse = [&](int start, int depth) {
        if (depth == r) {
            std::vector<std::vector<Rational>> basis(r, std::vector<Rational>(r));
            std::vector<Rational> rhs(r);
            for (int i = 0; i < r; ++i) {
                rhs[i] = p.rhs[row_ids[i]];
                for (int j = 0; j < r; ++j)
                    basis[i][j] = p.rows[row_ids[i]][combo[j]];
            }
            auto z = oracle_detail::solve_square(basis, rhs);
            if (!z)
                return;
            std::vector<Rational> x(n, Rational(0));
            for (int j = 0; j < r; ++j)
                x[combo[j]] = (*z)[j];
            for (int j = 0; j < n; ++j)
                if (x[j] < 0)
                    return;
            // must satisfy the dependent rows too
            for (int i = 0; i < m_rows; ++i) {
                Rational lhs = 0;
                for (int j = 0; j < n; ++j)
                    lhs += p.rows[i][j] * x[j];
                if (lhs != p.rhs[i])
                    return;
            }
            result.feasible = true;
            if (p.objective) {
                Rational value = 0;
                for (int j = 0; j < n; ++j)
                    value += (*p.objective)[j] * x[j];
                if (p.sense == Sense::Minimize)
                    value = -value;
                if (!result.best_objective || value > *result.best_objective)
                    result.best_objective = value;
            }
            return;
        }
        for (int j = start; j <= n - (r - depth); ++j) {
            combo[depth] = j;
            recurse(j + 1, depth + 1);
        }
    };
    if (r == 0) {
        // A = 0: feasible iff b = 0, basic solution x = 0
        bool zero = true;
        for (const auto& b : p.rhs)
            if (!b.is_zero())
                zero = false;
        result.feasible = zero;
        if (zero && p.objective)
            result.best_objective = Rational(0);
        return result;
    }
    recurse(0, 0);
    if (result.best_objective && p.sense == Sense::Minimize)
        *result.best_objective = -*result.best_objective;
    return result;
}

// ---------------------------------------------------------------------------
// Projected-gradient oracle for variance minimization, independent of the
// Frank-Wolfe path in the library.
// ---------------------------------------------------------------------------

/// Euclidean projection of v onto the probability simplex.
inline std::vector<double> project_simplex(std::vector<double> v)
{
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumulative = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cumulative += sorted[i];
        const double candidate = (cumulative - 1.0) / static_cast<double>(i + 1);
        if (sorted[i] - candidate > 0)
            theta = candidate;
    }
    for (double& entry : v)
        entry = std::max(entry - theta, 0.0);
    return v;
}

/// Long-horizon projected gradient descent on Var[K]; returns best variance.
inline double projected_gradient_variance(const SimplicialComplex& c,
                                          const EnergyFunction& h, long long iterations,
                                          double step)
{
    const auto& vertices = c.vertices();
    const int n = static_cast<int>(vertices.size());
    std::vector<int> position_of(vertices.empty() ? 0 : vertices.back() + 1, -1);
    for (int i = 0; i < n; ++i)
        position_of[vertices[i]] = i;

    std::vector<std::vector<int>> members;
    std::vector<double> energy;
    std::vector<double> base(n, 0.0);
    double total = 0.0;
    for (int id = 0; id < c.size(); ++id) {
        const Simplex& x = c.simplex(id);
        const double hx = static_cast<double>(h.at(x));
        total += hx;
        if (x.dim() == 0) {
            base[position_of[x.vertices[0]]] += hx;
            continue;
        }
        std::vector<int> m;
        for (int v : x.vertices)
            m.push_back(position_of[v]);
        members.push_back(std::move(m));
        energy.push_back(hx);
    }
    const double mean = total / n;

    std::vector<std::vector<double>> p;
    for (const auto& m : members)
        p.emplace_back(m.size(), 1.0 / static_cast<double>(m.size()));

    double best = std::numeric_limits<double>::infinity();
    std::vector<double> k(n);
    for (long long iter = 0; iter < iterations; ++iter) {
        std::fill(k.begin(), k.end(), 0.0);
        for (int i = 0; i < n; ++i)
            k[i] = base[i];
        for (std::size_t s = 0; s < members.size(); ++s)
            for (std::size_t i = 0; i < members[s].size(); ++i)
                k[members[s][i]] += energy[s] * p[s][i];
        double var = 0.0;
        for (int i = 0; i < n; ++i)
            var += (k[i] - mean) * (k[i] - mean);
        var /= n;
        best = std::min(best, var);

        for (std::size_t s = 0; s < members.size(); ++s) {
            for (std::size_t i = 0; i < members[s].size(); ++i)
                p[s][i] -= step * 2.0 / n * energy[s] * (k[members[s][i]] - mean);
            p[s] = project_simplex(std::move(p[s]));
        }
    }
    return best;
}

} // namespace curv::testing

#endif
