/**
 * Poincare-Hopf indices of locally injective functions and their
 * Monte-Carlo expectation.
 *
 * A function g on the vertices pushes omega forward to the vertex where g
 * is maximal on each simplex; the resulting integer index i(v) sums to the
 * Euler characteristic.  Averaging over uniform random vertex orders
 * recovers the Levitt curvature.
 */

#ifndef CURV_INDEX_HPP
#define CURV_INDEX_HPP

#include <cmath>
#include <map>
#include <vector>

#include "curv/complex.hpp"
#include "curv/curvature.hpp"
#include "curv/rng.hpp"

namespace curv {

using IndexMap = std::map<int, long long>;

struct TieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * i(v) = sum of omega(x) over simplices x whose g-argmax is v.  g must be
 * distinct on the vertices of every simplex (globally distinct suffices).
 */
inline IndexMap poincare_hopf_index(const SimplicialComplex& c,
                                    const std::map<int, double>& g)
{
    IndexMap index;
    for (int v : c.vertices()) {
        if (!g.count(v))
            throw GraphError("g is undefined on vertex " + std::to_string(v));
        index[v] = 0;
    }
    for (const auto& x : c.simplices()) {
        int arg = x.vertices[0];
        double best = g.at(arg);
        for (std::size_t i = 1; i < x.vertices.size(); ++i) {
            double value = g.at(x.vertices[i]);
            if (value > best) {
                best = value;
                arg = x.vertices[i];
            }
        }
        for (int v : x.vertices)
            if (v != arg && g.at(v) == best)
                throw TieError("g is not injective on a simplex");
        index[arg] += omega(x);
    }
    return index;
}

struct IndexExpectation {
    std::map<int, double> mean;
    std::map<int, double> stderr_; // sample standard deviation / sqrt(samples)
};

/**
 * Monte-Carlo index expectation under uniform random vertex orders:
 * each sample draws i.i.d. uniform reals on the vertices (resampled in the
 * measure-zero event of a tie) and evaluates the Poincare-Hopf index.
 * Deterministic for a fixed seed.
 */
inline IndexExpectation index_expectation_mc(const SimplicialComplex& c, long long samples,
                                             std::uint64_t seed)
{
    if (samples < 1)
        throw GraphError("samples must be >= 1");
    const auto& vertices = c.vertices();
    const int n = static_cast<int>(vertices.size());
    std::map<int, int> position;
    for (int i = 0; i < n; ++i)
        position[vertices[i]] = i;

    // simplices as positions into the value array, hot-loop friendly
    std::vector<std::vector<int>> members;
    std::vector<int> weight;
    members.reserve(c.size());
    for (const auto& x : c.simplices()) {
        std::vector<int> m;
        m.reserve(x.vertices.size());
        for (int v : x.vertices)
            m.push_back(position[v]);
        members.push_back(std::move(m));
        weight.push_back(omega(x));
    }

    Rng rng(seed);
    std::vector<double> values(n);
    std::vector<long long> idx(n);
    std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
    for (long long s = 0; s < samples; ++s) {
        bool distinct = false;
        while (!distinct) {
            for (int i = 0; i < n; ++i)
                values[i] = rng.u01();
            distinct = true;
            for (int i = 0; i < n && distinct; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (values[i] == values[j]) {
                        distinct = false;
                        break;
                    }
        }
        std::fill(idx.begin(), idx.end(), 0);
        for (std::size_t k = 0; k < members.size(); ++k) {
            const auto& m = members[k];
            int arg = m[0];
            for (std::size_t i = 1; i < m.size(); ++i)
                if (values[m[i]] > values[arg])
                    arg = m[i];
            idx[arg] += weight[k];
        }
        for (int i = 0; i < n; ++i) {
            sum[i] += static_cast<double>(idx[i]);
            sum_sq[i] += static_cast<double>(idx[i]) * static_cast<double>(idx[i]);
        }
    }

    IndexExpectation result;
    for (int i = 0; i < n; ++i) {
        const double mean = sum[i] / static_cast<double>(samples);
        double se = 0.0;
        if (samples > 1) {
            double ss = (sum_sq[i] - static_cast<double>(samples) * mean * mean) /
                        static_cast<double>(samples - 1);
            se = std::sqrt(std::max(ss, 0.0) / static_cast<double>(samples));
        }
        result.mean[vertices[i]] = mean;
        result.stderr_[vertices[i]] = se;
    }
    return result;
}

} // namespace curv

#endif
