/**
 * Variance minimization over distribution families by the Frank-Wolfe
 * (conditional gradient) method.
 *
 * The feasible region is a product of probability simplices, one per
 * positive-dimensional simplex, so the linear subproblem splits: put unit
 * mass on the vertex with the smallest gradient coordinate.  The mean
 * curvature is pinned to H(G)/|V| by Gauss-Bonnet, which makes Var[K] a
 * convex quadratic in the family.  Everything here runs in floating
 * point; the duality gap reported bounds the distance to the optimum.
 */

#ifndef CURV_MINVAR_HPP
#define CURV_MINVAR_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "curv/complex.hpp"
#include "curv/curvature.hpp"

namespace curv {

struct MinVarReport {
    RealDistributionFamily family;
    double variance = 0.0;
    double gap_bound = 0.0;
    long long iterations = 0;
};

/**
 * Frank-Wolfe with the open-loop step 2/(k+2), stopping once the duality
 * gap drops to tol or after max_iter iterations.  Always returns the best
 * iterate seen; ties in the linear subproblem break toward the lowest
 * vertex id.
 */
inline MinVarReport minimize_variance(const SimplicialComplex& c, const EnergyFunction& h,
                                      double tol, long long max_iter)
{
    if (tol <= 0)
        throw GraphError("tol must be positive");
    const auto& vertices = c.vertices();
    const int n = static_cast<int>(vertices.size());
    std::vector<int> position_of(vertices.empty() ? 0 : vertices.back() + 1, -1);
    for (int i = 0; i < n; ++i)
        position_of[vertices[i]] = i;

    // flattened view of the positive-dimensional simplices
    std::vector<std::vector<int>> members; // positions per simplex
    std::vector<double> energy;            // h(x)
    std::vector<int> simplex_id;
    std::vector<double> base(n, 0.0); // fixed vertex-simplex contribution
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
        m.reserve(x.vertices.size());
        for (int v : x.vertices)
            m.push_back(position_of[v]);
        members.push_back(std::move(m));
        energy.push_back(hx);
        simplex_id.push_back(id);
    }
    const double mean = n > 0 ? total / n : 0.0;

    RealDistributionFamily family = RealDistributionFamily::uniform(c);
    auto curvature_of = [&](const RealDistributionFamily& f) {
        std::vector<double> k = base;
        for (std::size_t s = 0; s < members.size(); ++s) {
            const auto& p = f.at(simplex_id[s]);
            for (std::size_t i = 0; i < members[s].size(); ++i)
                k[members[s][i]] += energy[s] * p[i];
        }
        return k;
    };
    auto variance_of = [&](const std::vector<double>& k) {
        double var = 0.0;
        for (double value : k)
            var += (value - mean) * (value - mean);
        return n > 0 ? var / n : 0.0;
    };

    std::vector<double> k = curvature_of(family);

    MinVarReport report;
    report.family = family;
    report.variance = variance_of(k);
    report.gap_bound = std::numeric_limits<double>::infinity();

    if (members.empty() || n == 0) {
        report.gap_bound = 0.0;
        return report;
    }

    std::vector<int> choice(members.size());
    for (long long iter = 0; iter < max_iter; ++iter) {
        // gradient w.r.t. p_{x,v} is (2/n) h(x) (K(v) - mean)
        double inner_p = 0.0; // <grad, p> up to the common factor 2/n
        for (std::size_t s = 0; s < members.size(); ++s) {
            const auto& p = family.at(simplex_id[s]);
            for (std::size_t i = 0; i < members[s].size(); ++i)
                inner_p += energy[s] * (k[members[s][i]] - mean) * p[i];
        }
        double inner_s = 0.0; // <grad, s> for the linear minimizer s
        for (std::size_t s = 0; s < members.size(); ++s) {
            int best = 0;
            double best_score = energy[s] * (k[members[s][0]] - mean);
            for (std::size_t i = 1; i < members[s].size(); ++i) {
                const double score = energy[s] * (k[members[s][i]] - mean);
                if (score < best_score) {
                    best_score = score;
                    best = static_cast<int>(i);
                }
            }
            choice[s] = best;
            inner_s += best_score;
        }
        const double gap = 2.0 / n * (inner_p - inner_s);
        report.iterations = iter;
        if (gap < report.gap_bound)
            report.gap_bound = gap;
        if (gap <= tol)
            break;

        const double step = 2.0 / static_cast<double>(iter + 2);
        for (std::size_t s = 0; s < members.size(); ++s) {
            auto& p = family.at(simplex_id[s]);
            for (std::size_t i = 0; i < p.size(); ++i)
                p[i] *= 1.0 - step;
            p[choice[s]] += step;
        }
        for (int i = 0; i < n; ++i)
            k[i] = (1.0 - step) * k[i] + step * base[i];
        for (std::size_t s = 0; s < members.size(); ++s)
            k[members[s][choice[s]]] += step * energy[s];

        if ((iter & 0xfff) == 0xfff)
            k = curvature_of(family); // periodic exact refresh against drift

        const double var = variance_of(k);
        if (var < report.variance) {
            report.variance = var;
            report.family = family;
        }
    }
    return report;
}

} // namespace curv

#endif
