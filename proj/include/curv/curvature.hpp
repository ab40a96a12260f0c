/**
 * Curvatures induced by per-simplex probability distributions.
 *
 * A distribution family assigns each simplex x a probability vector p_x on
 * its vertices; distributing the energy h(x) according to p_x yields the
 * vertex curvature K(v) = sum_{x : v in x} p_x(v) h(x).  Summing K over
 * all vertices always reproduces the total energy (Gauss-Bonnet), which is
 * the central conservation law checked throughout the test suite.
 */

#ifndef CURV_CURVATURE_HPP
#define CURV_CURVATURE_HPP

#include <map>
#include <utility>
#include <vector>

#include "curv/complex.hpp"
#include "curv/rational.hpp"

namespace curv {

/**
 * Energy h : G -> Q.  Defaults to omega(x) = (-1)^dim(x); individual
 * simplices can carry overrides (e.g. loaded from an energy file).
 */
class EnergyFunction {
public:
    EnergyFunction() = default;

    Rational at(const Simplex& x) const
    {
        auto it = overrides_.find(x.vertices);
        if (it != overrides_.end())
            return it->second;
        return Rational(omega(x));
    }

    void set(const std::vector<int>& vertex_list, Rational value)
    {
        overrides_[vertex_list] = std::move(value);
    }

    bool is_default() const { return overrides_.empty(); }
    const std::map<std::vector<int>, Rational>& overrides() const { return overrides_; }

private:
    std::map<std::vector<int>, Rational> overrides_;
};

/// Total energy H(G) = sum_x h(x); equals chi(G) for the default energy.
inline Rational total_energy(const SimplicialComplex& c, const EnergyFunction& h = {})
{
    Rational total = 0;
    for (const auto& x : c.simplices())
        total += h.at(x);
    return total;
}

inline Rational euler_characteristic(const SimplicialComplex& c, const EnergyFunction& h)
{
    return total_energy(c, h);
}

/**
 * A probability vector on the vertices of every simplex, aligned with the
 * simplex ids of one ambient complex.  Entries are of type T: exact
 * rationals for the LP path, doubles for variance minimization.
 */
template <typename T>
class BasicDistributionFamily {
public:
    BasicDistributionFamily() = default;

    /// Uniform family: p_x(v) = 1/(dim(x)+1) on every simplex.
    static BasicDistributionFamily uniform(const SimplicialComplex& c)
    {
        BasicDistributionFamily family;
        family.dist_.reserve(c.size());
        for (const auto& x : c.simplices()) {
            std::size_t k = x.vertices.size();
            family.dist_.emplace_back(k, T(1) / T(static_cast<int>(k)));
        }
        return family;
    }

    /// Family with all mass on each simplex's argmax under g (see index.hpp).
    static BasicDistributionFamily deterministic(const SimplicialComplex& c,
                                                 const std::vector<int>& chosen_vertex)
    {
        BasicDistributionFamily family;
        family.dist_.reserve(c.size());
        for (int id = 0; id < c.size(); ++id) {
            const Simplex& x = c.simplex(id);
            std::vector<T> p(x.vertices.size(), T(0));
            auto pos = std::find(x.vertices.begin(), x.vertices.end(), chosen_vertex[id]);
            if (pos == x.vertices.end())
                throw GraphError("chosen vertex not in simplex");
            p[pos - x.vertices.begin()] = T(1);
            family.dist_.emplace_back(std::move(p));
        }
        return family;
    }

    bool complete_for(const SimplicialComplex& c) const
    {
        if (static_cast<int>(dist_.size()) != c.size())
            return false;
        for (int id = 0; id < c.size(); ++id)
            if (dist_[id].size() != c.simplex(id).vertices.size())
                return false;
        return true;
    }

    const std::vector<T>& at(int simplex_id) const { return dist_[simplex_id]; }
    std::vector<T>& at(int simplex_id) { return dist_[simplex_id]; }

    void resize(const SimplicialComplex& c)
    {
        dist_.assign(c.size(), {});
        for (int id = 0; id < c.size(); ++id)
            dist_[id].assign(c.simplex(id).vertices.size(), T(0));
    }

    int size() const { return static_cast<int>(dist_.size()); }

    /// p_x(v) entries in [0,1] summing to 1, zero off-support by layout.
    bool is_stochastic() const
    {
        for (const auto& p : dist_) {
            T sum(0);
            for (const T& entry : p) {
                if (entry < T(0) || entry > T(1))
                    return false;
                sum += entry;
            }
            if (sum != T(1))
                return false;
        }
        return true;
    }

private:
    std::vector<std::vector<T>> dist_; // indexed by simplex id
};

using DistributionFamily = BasicDistributionFamily<Rational>;
using RealDistributionFamily = BasicDistributionFamily<double>;

/// Vertex id -> exact curvature value.
using CurvatureMap = std::map<int, Rational>;

struct MissingSimplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * K(v) = sum_{x : v in x} p_x(v) h(x), exact.  The Gauss-Bonnet identity
 * sum_v K(v) = H(G) holds by construction.
 */
inline CurvatureMap curvature_from_family(const SimplicialComplex& c,
                                          const DistributionFamily& family,
                                          const EnergyFunction& h = {})
{
    if (!family.complete_for(c))
        throw MissingSimplexError("distribution family does not cover the complex");
    CurvatureMap curvature;
    for (int v : c.vertices())
        curvature[v] = 0;
    for (int id = 0; id < c.size(); ++id) {
        const Simplex& x = c.simplex(id);
        const Rational hx = h.at(x);
        const auto& p = family.at(id);
        for (std::size_t i = 0; i < x.vertices.size(); ++i)
            if (p[i] != 0)
                curvature[x.vertices[i]] += p[i] * hx;
    }
    return curvature;
}

/**
 * Levitt curvature: the curvature of the uniform family,
 * K(v) = 1 + sum_k (-1)^(k+1) v_k(S(v)) / (k+2), with v_k counted on the
 * unit sphere.  On 2-graphs this reduces to K(v) = 1 - deg(v)/6.
 */
inline CurvatureMap levitt_curvature(const SimplicialComplex& c)
{
    CurvatureMap curvature;
    for (int v : c.vertices()) {
        Rational k(1);
        const auto fv = unit_sphere(c, v).f_vector();
        for (std::size_t d = 0; d < fv.size(); ++d) {
            Rational term = Rational(fv[d]) / Rational(static_cast<int>(d) + 2);
            k += (d % 2 == 0) ? -term : term;
        }
        curvature[v] = k;
    }
    return curvature;
}

/**
 * Exact range of K(v) over all distribution families: the vertex simplex
 * contributes h({v}) unconditionally, every other simplex containing v can
 * contribute anywhere in [min(h(x),0), max(h(x),0)].  Both ends are
 * attained by deterministic families.
 */
inline std::pair<Rational, Rational> curvature_bounds(const SimplicialComplex& c,
                                                      const EnergyFunction& h, int v)
{
    Rational lo = 0, hi = 0;
    for (int id : c.star(v)) {
        const Simplex& x = c.simplex(id);
        const Rational hx = h.at(x);
        if (x.dim() == 0) {
            lo += hx;
            hi += hx;
        } else if (hx < 0) {
            lo += hx;
        } else {
            hi += hx;
        }
    }
    return {lo, hi};
}

/// Var[K] = sum_v (K(v) - m)^2 / |V| with m the mean curvature.
inline Rational variance(const CurvatureMap& k)
{
    if (k.empty())
        return 0;
    const Rational n(static_cast<int>(k.size()));
    Rational mean = 0;
    for (const auto& [v, value] : k)
        mean += value;
    mean /= n;
    Rational var = 0;
    for (const auto& [v, value] : k)
        var += (value - mean) * (value - mean);
    return var / n;
}

} // namespace curv

#endif
