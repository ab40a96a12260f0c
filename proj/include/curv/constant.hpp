/**
 * The constant-curvature problem: does a distribution family exist whose
 * curvature equals H(G)/|V| at every vertex?
 *
 * The question is a linear program over the per-simplex probability
 * vectors: one normalization row per simplex, one curvature row per
 * vertex.  Feasible instances yield an exact family; infeasible ones a
 * verifiable Farkas certificate.  Trees are also solved directly by leaf
 * peeling, and the affine dimension of the solution polytope is computed
 * with implicit-equality detection.
 */

#ifndef CURV_CONSTANT_HPP
#define CURV_CONSTANT_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "curv/complex.hpp"
#include "curv/curvature.hpp"
#include "curv/graph.hpp"
#include "curv/lp.hpp"

namespace curv {

struct TreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShareOutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Exact equality system for constant curvature.  Variables are the
 * (simplex, vertex) pairs of positive-dimensional simplices; vertex
 * simplices contribute their energy as a fixed constant.  Row order:
 * normalizations (by simplex id), then one row per vertex.
 */
struct ConstantCurvatureSystem {
    Rational target;                           // H(G) / |V|
    std::vector<std::pair<int, int>> variables; // (simplex id, position)
    std::vector<int> var_offset;                // simplex id -> first var, -1 for dim 0
    std::vector<int> norm_row_of;               // simplex id -> row, -1 for dim 0
    std::vector<int> vertex_of_row;             // vertex row order (after norm rows)
    int num_norm_rows = 0;
    LPProblem lp; // equality rows only, variables >= 0

    int num_vars() const { return lp.num_vars; }
};

struct EmptyComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ConstantCurvatureSystem assemble(const SimplicialComplex& c,
                                        const EnergyFunction& h = {})
{
    if (c.vertex_count() < 1)
        throw EmptyComplexError("constant-curvature system needs at least one vertex");

    ConstantCurvatureSystem sys;
    sys.target = total_energy(c, h) / c.vertex_count();
    sys.var_offset.assign(c.size(), -1);
    sys.norm_row_of.assign(c.size(), -1);

    for (int id = 0; id < c.size(); ++id) {
        const Simplex& x = c.simplex(id);
        if (x.dim() == 0)
            continue;
        sys.var_offset[id] = static_cast<int>(sys.variables.size());
        for (int pos = 0; pos < static_cast<int>(x.vertices.size()); ++pos)
            sys.variables.emplace_back(id, pos);
    }
    sys.lp.num_vars = static_cast<int>(sys.variables.size());

    for (int id = 0; id < c.size(); ++id) {
        if (sys.var_offset[id] < 0)
            continue;
        std::vector<Rational> row(sys.lp.num_vars, Rational(0));
        const auto k = c.simplex(id).vertices.size();
        for (std::size_t pos = 0; pos < k; ++pos)
            row[sys.var_offset[id] + pos] = 1;
        sys.norm_row_of[id] = static_cast<int>(sys.lp.rows.size());
        sys.lp.add_equality(std::move(row), Rational(1));
    }
    sys.num_norm_rows = static_cast<int>(sys.lp.rows.size());

    for (int v : c.vertices()) {
        std::vector<Rational> row(sys.lp.num_vars, Rational(0));
        Rational rhs = sys.target;
        for (int id : c.star(v)) {
            const Simplex& x = c.simplex(id);
            const Rational hx = h.at(x);
            if (x.dim() == 0) {
                rhs -= hx;
                continue;
            }
            const auto pos = std::lower_bound(x.vertices.begin(), x.vertices.end(), v) -
                             x.vertices.begin();
            row[sys.var_offset[id] + pos] = hx;
        }
        sys.vertex_of_row.push_back(v);
        sys.lp.add_equality(std::move(row), std::move(rhs));
    }
    return sys;
}

/// Turn an LP point over the system variables into a distribution family.
inline DistributionFamily family_from_point(const SimplicialComplex& c,
                                            const ConstantCurvatureSystem& sys,
                                            const std::vector<Rational>& point)
{
    DistributionFamily family;
    family.resize(c);
    for (int id = 0; id < c.size(); ++id)
        if (c.simplex(id).dim() == 0)
            family.at(id)[0] = 1;
    for (std::size_t k = 0; k < sys.variables.size(); ++k) {
        auto [id, pos] = sys.variables[k];
        family.at(id)[pos] = point[k];
    }
    return family;
}

struct ConstantCurvatureResult {
    bool feasible = false;
    Rational target;
    std::optional<DistributionFamily> family;          // on success
    std::optional<std::vector<Rational>> certificate;  // Farkas multipliers on the
                                                       // system rows otherwise
};

namespace detail {

/// Direct Farkas certificate from a violated per-vertex curvature bound.
inline std::vector<Rational> bound_violation_certificate(const SimplicialComplex& c,
                                                         const EnergyFunction& h,
                                                         const ConstantCurvatureSystem& sys,
                                                         int v, bool target_above_hi)
{
    std::vector<Rational> y(sys.lp.rows.size(), Rational(0));
    int vertex_row = -1;
    for (std::size_t i = 0; i < sys.vertex_of_row.size(); ++i)
        if (sys.vertex_of_row[i] == v)
            vertex_row = sys.num_norm_rows + static_cast<int>(i);
    y[vertex_row] = target_above_hi ? 1 : -1;
    for (int id : c.star(v)) {
        const Simplex& x = c.simplex(id);
        if (x.dim() == 0)
            continue;
        const Rational hx = h.at(x);
        if (target_above_hi && hx > 0)
            y[sys.norm_row_of[id]] = -hx;
        else if (!target_above_hi && hx < 0)
            y[sys.norm_row_of[id]] = hx;
    }
    return y;
}

} // namespace detail

/**
 * Decide constant curvature.  The per-vertex bound check runs first: when
 * the target lies outside some vertex's attainable range the certificate
 * is assembled directly; otherwise the exact LP decides.
 */
inline ConstantCurvatureResult solve_constant(const SimplicialComplex& c,
                                              const EnergyFunction& h = {})
{
    ConstantCurvatureResult result;
    auto sys = assemble(c, h);
    result.target = sys.target;

    for (int v : c.vertices()) {
        auto [lo, hi] = curvature_bounds(c, h, v);
        if (sys.target < lo || sys.target > hi) {
            result.feasible = false;
            result.certificate =
                detail::bound_violation_certificate(c, h, sys, v, sys.target > hi);
            return result;
        }
    }

    LPOutcome outcome = solve(sys.lp);
    if (outcome.status == LPStatus::Feasible) {
        result.feasible = true;
        result.family = family_from_point(c, sys, *outcome.point);
    } else {
        result.feasible = false;
        result.certificate = std::move(outcome.certificate);
    }
    return result;
}

/// Recompute the curvature of a family exactly and test constancy.
inline std::pair<bool, CurvatureMap> verify_family(const SimplicialComplex& c,
                                                   const EnergyFunction& h,
                                                   const DistributionFamily& family)
{
    CurvatureMap k = curvature_from_family(c, family, h);
    const Rational target = total_energy(c, h) / c.vertex_count();
    bool constant = true;
    for (const auto& [v, value] : k)
        if (value != target) {
            constant = false;
            break;
        }
    return {constant, std::move(k)};
}

/**
 * Unique constant-curvature family of a tree by leaf peeling: each leaf's
 * stem share is forced by the leaf's curvature equation; deleting the leaf
 * leaves a smaller tree with an accumulated residue at the neighbor.
 * Shares land in [0,1] automatically for the default energy; a general
 * energy may force a share outside and raises then.
 */
inline DistributionFamily solve_tree(const Graph& g, const EnergyFunction& h = {})
{
    if (!is_tree(g))
        throw TreeError("input graph is not a tree");
    const int n = g.vertex_count();
    SimplicialComplex c = build_clique_complex(g);
    const Rational target = total_energy(c, h) / n;

    std::vector<Rational> h_vertex(n), residue(n, Rational(0));
    for (int v = 0; v < n; ++v)
        h_vertex[v] = h.at(Simplex({v}));

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges())
        adj[u].insert(v), adj[v].insert(u);

    DistributionFamily family;
    family.resize(c);
    for (int id = 0; id < c.size(); ++id)
        if (c.simplex(id).dim() == 0)
            family.at(id)[0] = 1;

    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() == 1)
            leaves.insert(v);

    while (!leaves.empty()) {
        const int v = *leaves.begin();
        leaves.erase(leaves.begin());
        if (adj[v].empty())
            break; // last remaining vertex of this component
        const int u = *adj[v].begin();
        std::vector<int> edge = v < u ? std::vector<int>{v, u} : std::vector<int>{u, v};
        const Rational he = h.at(Simplex(edge));
        if (he.is_zero())
            throw ShareOutOfRangeError("tree edge with zero energy cannot take a share");
        Rational share_v = (target - h_vertex[v] - residue[v]) / he;
        if (share_v < 0 || share_v > 1)
            throw ShareOutOfRangeError("forced share " + to_string(share_v) +
                                       " outside [0,1]");
        const int id = c.id_of(edge);
        family.at(id)[v < u ? 0 : 1] = share_v;
        family.at(id)[v < u ? 1 : 0] = 1 - share_v;
        residue[u] += he * (1 - share_v);
        adj[u].erase(v);
        adj[v].clear();
        if (adj[u].size() == 1)
            leaves.insert(u);
    }
    return family;
}

/// Solution polytope of the constant-curvature system.
struct SolutionPolytope {
    DistributionFamily interior_point;
    int affine_dimension = 0;
    std::set<int> implicit_zero_variables;
};

/**
 * Affine dimension of the set of families with constant curvature, or
 * nullopt when the set is empty.
 *
 * Strategy: maximize t subject to the system with every variable >= t
 * (substituting q = p - t keeps the row count unchanged).  A positive
 * optimum means the polytope has a point strictly inside every bound, so
 * its affine hull is cut out by the equality rows alone; at t = 0 the
 * variables stuck at zero are tested one by one and the identically-zero
 * ones join the equality system as implicit equalities.
 */
inline std::optional<SolutionPolytope> solution_polytope(const SimplicialComplex& c,
                                                         const EnergyFunction& h = {})
{
    auto sys = assemble(c, h);
    const int nv = sys.num_vars();

    if (nv == 0) {
        // no positive-dimensional simplices: feasible iff each vertex row
        // is the trivial identity 0 = 0
        for (std::size_t i = 0; i < sys.lp.rows.size(); ++i)
            if (!sys.lp.rhs[i].is_zero())
                return std::nullopt;
        SolutionPolytope polytope;
        polytope.interior_point = family_from_point(c, sys, {});
        polytope.affine_dimension = 0;
        return polytope;
    }

    // max t over (q, t+, t-) with p = q + t
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
    lifted.sense = Sense::Maximize;

    LPOutcome outcome = solve(lifted);
    if (outcome.status == LPStatus::Infeasible)
        return std::nullopt;
    if (outcome.status != LPStatus::Optimal)
        throw std::logic_error("max-t program must be bounded");
    const Rational t_star = *outcome.objective_value;
    if (t_star < 0)
        return std::nullopt;

    std::vector<Rational> point(nv);
    for (int j = 0; j < nv; ++j)
        point[j] = (*outcome.point)[j] + t_star;

    SolutionPolytope polytope;
    polytope.interior_point = family_from_point(c, sys, point);

    if (t_star.is_zero()) {
        // variables at zero might be zero on the whole polytope
        std::set<int> suspects;
        for (int j = 0; j < nv; ++j)
            if (point[j].is_zero())
                suspects.insert(j);
        while (!suspects.empty()) {
            const int j = *suspects.begin();
            suspects.erase(suspects.begin());
            LPProblem probe = sys.lp;
            std::vector<Rational> obj(nv, Rational(0));
            obj[j] = 1;
            probe.objective = std::move(obj);
            probe.sense = Sense::Maximize;
            LPOutcome max_j = solve(probe);
            if (max_j.status != LPStatus::Optimal)
                throw std::logic_error("bounded probe must be optimal");
            if ((*max_j.objective_value).is_zero()) {
                polytope.implicit_zero_variables.insert(j);
            } else {
                // every variable positive in this solution is exonerated
                for (auto it = suspects.begin(); it != suspects.end();)
                    if (!(*max_j.point)[*it].is_zero())
                        it = suspects.erase(it);
                    else
                        ++it;
            }
        }
    }

    std::vector<std::vector<Rational>> equalities = sys.lp.rows;
    for (int j : polytope.implicit_zero_variables) {
        std::vector<Rational> unit(nv, Rational(0));
        unit[j] = 1;
        equalities.push_back(std::move(unit));
    }
    polytope.affine_dimension = nv - rank(std::move(equalities));
    return polytope;
}

/// Affine dimension, -1 when the solution set is empty.
inline int solution_dimension(const SimplicialComplex& c, const EnergyFunction& h = {})
{
    auto polytope = solution_polytope(c, h);
    return polytope ? polytope->affine_dimension : -1;
}

} // namespace curv

#endif
