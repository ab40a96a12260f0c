/**
 * Erdos-Renyi machinery: the exact expected Euler characteristic of the
 * clique complex of G(n, p), an independent small-n enumeration oracle,
 * and seeded empirical sampling.
 */

#ifndef CURV_RANDOM_GRAPHS_HPP
#define CURV_RANDOM_GRAPHS_HPP

#include <cmath>
#include <utility>

#include "curv/complex.hpp"
#include "curv/graph.hpp"
#include "curv/rational.hpp"
#include "curv/rng.hpp"

namespace curv {

struct ErParams {
    int n = 1;
    Rational p = Rational(1, 2);
    std::uint64_t seed = 0;
};

inline void check_er_params(const ErParams& params)
{
    if (params.n < 1)
        throw GraphError("Erdos-Renyi n must be >= 1");
    if (params.p < 0 || params.p > 1)
        throw GraphError("Erdos-Renyi p must lie in [0,1]");
}

inline Rational rational_pow(const Rational& base, long long exponent)
{
    Rational result = 1;
    for (long long i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

/// E_{n,p}[chi] = sum_{k=1}^n (-1)^(k+1) C(n,k) p^C(k,2), exact.
inline Rational expected_chi_formula(int n, const Rational& p)
{
    check_er_params({n, p, 0});
    Rational total = 0;
    for (int k = 1; k <= n; ++k) {
        Rational term = Rational(binomial(n, k)) *
                        rational_pow(p, static_cast<long long>(k) * (k - 1) / 2);
        total += (k % 2 == 1) ? term : -term;
    }
    return total;
}

/**
 * Independent oracle: enumerate all 2^C(n,2) labeled graphs and weight each
 * chi(clique complex) by p^|E| (1-p)^(C(n,2)-|E|).  Exact; n <= 5 only.
 */
inline Rational expected_chi_enumeration(int n, const Rational& p)
{
    check_er_params({n, p, 0});
    if (n > 5)
        throw GraphError("enumeration oracle capped at n = 5");
    const int max_edges = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);

    std::vector<Rational> pow_p(max_edges + 1), pow_q(max_edges + 1);
    for (int e = 0; e <= max_edges; ++e) {
        pow_p[e] = rational_pow(p, e);
        pow_q[e] = rational_pow(1 - p, e);
    }

    Rational total = 0;
    for (std::uint32_t mask = 0; mask < (1u << max_edges); ++mask) {
        Graph g(n);
        int edges = 0;
        for (int e = 0; e < max_edges; ++e)
            if (mask & (1u << e)) {
                g.add_edge(slots[e].first, slots[e].second);
                ++edges;
            }
        const Rational chi = euler_characteristic(build_clique_complex(g));
        total += chi * pow_p[edges] * pow_q[max_edges - edges];
    }
    return total;
}

/// One G(n, p) draw; every edge included independently with probability p.
inline Graph sample_er(const ErParams& params)
{
    check_er_params(params);
    Rng rng(params.seed);
    const double p = static_cast<double>(params.p);
    Graph g(params.n);
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

struct EmpiricalChi {
    double mean = 0.0;
    double stderr_ = 0.0;
    long long samples = 0;
};

/// Empirical mean/stderr of chi(clique complex) over seeded G(n,p) draws.
inline EmpiricalChi empirical_chi(const ErParams& params, long long samples)
{
    check_er_params(params);
    if (samples < 1)
        throw GraphError("samples must be >= 1");
    Rng rng(params.seed);
    const double p = static_cast<double>(params.p);
    double sum = 0.0, sum_sq = 0.0;
    for (long long s = 0; s < samples; ++s) {
        Graph g(params.n);
        for (int u = 0; u < params.n; ++u)
            for (int v = u + 1; v < params.n; ++v)
                if (rng.bernoulli(p))
                    g.add_edge(u, v);
        const double chi = static_cast<double>(euler_characteristic(build_clique_complex(g)));
        sum += chi;
        sum_sq += chi * chi;
    }
    EmpiricalChi result;
    result.samples = samples;
    result.mean = sum / static_cast<double>(samples);
    if (samples > 1) {
        const double ss =
            (sum_sq - static_cast<double>(samples) * result.mean * result.mean) /
            static_cast<double>(samples - 1);
        result.stderr_ = std::sqrt(std::max(ss, 0.0) / static_cast<double>(samples));
    }
    return result;
}

} // namespace curv

#endif
