/**
 * Exact rational linear programming.
 *
 * Two-phase dense-tableau simplex with Bland's rule over arbitrary-
 * precision rationals.  No floating point anywhere: feasibility answers
 * are mathematical yes/no claims, and returned points and infeasibility
 * certificates re-substitute exactly.
 *
 * Problems are stated as equality rows over box-bounded variables
 * (lower bounds default to 0).  Upper bounds, when present, are folded
 * into explicit slack rows internally; the Farkas certificate carries one
 * multiplier per equality row followed by one per upper-bound row.
 */

#ifndef CURV_LP_HPP
#define CURV_LP_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curv/rational.hpp"

namespace curv {

enum class LPStatus { Feasible, Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

struct LPProblem {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows; // equality coefficient rows
    std::vector<Rational> rhs;
    std::vector<Rational> lower_bounds; // empty means all zero
    std::optional<std::vector<Rational>> upper_bounds;
    std::optional<std::vector<Rational>> objective;
    Sense sense = Sense::Maximize;
    long long pivot_cap = 1'000'000;

    void add_equality(std::vector<Rational> row, Rational b)
    {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }

    Rational lower(int j) const
    {
        return lower_bounds.empty() ? Rational(0) : lower_bounds[j];
    }
};

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    std::optional<std::vector<Rational>> point;
    std::optional<Rational> objective_value;
    std::optional<std::vector<Rational>> certificate;
};

namespace detail {

/**
 * Standard-form instance: min c.y  s.t.  A y = b, y >= 0, produced from an
 * LPProblem by shifting away lower bounds and adding one slack row per
 * finite upper bound.  Keeps enough bookkeeping to translate points and
 * certificates back.
 */
struct StandardForm {
    int n = 0;       // structural columns (original vars + slacks)
    int n_orig = 0;  // original variable count
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> cost;   // phase-2 cost (minimization)
    Rational cost_shift = 0;      // constant from the lower-bound shift
    bool maximize = false;

    static StandardForm from(const LPProblem& p)
    {
        StandardForm sf;
        sf.n_orig = p.num_vars;
        sf.maximize = p.sense == Sense::Maximize;

        std::vector<int> slack_of; // var j -> slack column, or -1
        slack_of.assign(p.num_vars, -1);
        int n = p.num_vars;
        if (p.upper_bounds) {
            for (int j = 0; j < p.num_vars; ++j)
                slack_of[j] = n++;
        }
        sf.n = n;

        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            std::vector<Rational> row(n, Rational(0));
            Rational b = p.rhs[i];
            for (int j = 0; j < p.num_vars; ++j) {
                row[j] = p.rows[i][j];
                b -= p.rows[i][j] * p.lower(j);
            }
            sf.rows.push_back(std::move(row));
            sf.rhs.push_back(std::move(b));
        }
        if (p.upper_bounds) {
            for (int j = 0; j < p.num_vars; ++j) {
                std::vector<Rational> row(n, Rational(0));
                row[j] = 1;
                row[slack_of[j]] = 1;
                sf.rows.push_back(std::move(row));
                sf.rhs.push_back((*p.upper_bounds)[j] - p.lower(j));
            }
        }

        sf.cost.assign(n, Rational(0));
        if (p.objective) {
            for (int j = 0; j < p.num_vars; ++j) {
                Rational c = (*p.objective)[j];
                if (sf.maximize)
                    c = -c;
                sf.cost[j] = c;
                sf.cost_shift += (*p.objective)[j] * p.lower(j);
            }
        }
        return sf;
    }
};

} // namespace detail

/**
 * Dense-tableau simplex over exact rationals.  Exposed as a class so the
 * constant-curvature solver can reuse a factored instance for repeated
 * objectives; solve() below is the one-shot entry point.
 */
class SimplexSolver {
public:
    explicit SimplexSolver(const LPProblem& p)
        : problem_(p), sf_(detail::StandardForm::from(p))
    {
        build_tableau();
    }

    LPOutcome run()
    {
        LPOutcome outcome;
        if (!phase_one()) {
            outcome.status = LPStatus::Infeasible;
            outcome.certificate = farkas_certificate();
            return outcome;
        }
        if (!problem_.objective) {
            outcome.status = LPStatus::Feasible;
            outcome.point = extract_point();
            return outcome;
        }
        if (!phase_two()) {
            outcome.status = LPStatus::Unbounded;
            outcome.point = extract_point();
            return outcome;
        }
        outcome.status = LPStatus::Optimal;
        outcome.point = extract_point();
        Rational value = sf_.cost_shift;
        const auto x = *outcome.point;
        for (int j = 0; j < problem_.num_vars; ++j)
            value += (*problem_.objective)[j] * x[j];
        outcome.objective_value = value;
        return outcome;
    }

private:
    // Tableau layout: columns [0, n) structural, [n, n+m) artificial,
    // column n+m the right-hand side.  basis_[i] is the column basic in
    // row i; dead rows (redundant after phase one) are skipped.
    void build_tableau()
    {
        const int m = static_cast<int>(sf_.rows.size());
        const int n = sf_.n;
        m_ = m;
        n_ = n;
        row_flip_.assign(m, false);
        tableau_.assign(m, std::vector<Rational>(n + m + 1, Rational(0)));
        for (int i = 0; i < m; ++i) {
            bool flip = sf_.rhs[i] < 0;
            row_flip_[i] = flip;
            for (int j = 0; j < n; ++j)
                tableau_[i][j] = flip ? -sf_.rows[i][j] : sf_.rows[i][j];
            tableau_[i][n + i] = 1;
            tableau_[i][n + m] = flip ? -sf_.rhs[i] : sf_.rhs[i];
        }
        dead_.assign(m, false);
        basis_.resize(m);
        for (int i = 0; i < m; ++i)
            basis_[i] = n + i;
    }

    /// Reduced-cost row for the given column costs (basic columns get 0).
    std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const
    {
        std::vector<Rational> r(cost);
        for (int i = 0; i < m_; ++i) {
            if (dead_[i])
                continue;
            const Rational cb = cost[basis_[i]];
            if (cb.is_zero())
                continue;
            const auto& row = tableau_[i];
            for (int j = 0; j <= n_ + m_; ++j)
                if (!row[j].is_zero())
                    r[j] -= cb * row[j];
        }
        return r;
    }

    void pivot(int row, int col)
    {
        auto& prow = tableau_[row];
        const Rational inv = 1 / prow[col];
        if (inv != 1)
            for (auto& entry : prow)
                if (!entry.is_zero())
                    entry *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == row || dead_[i])
                continue;
            eliminate(tableau_[i], prow, col);
        }
        eliminate(objective_, prow, col);
        basis_[row] = col;
        if (++pivots_ > problem_.pivot_cap)
            throw ResourceLimitError("simplex pivot cap exceeded");
    }

    static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& prow,
                          int col)
    {
        const Rational factor = target[col];
        if (factor.is_zero())
            return;
        const std::size_t width = prow.size();
        for (std::size_t j = 0; j < width; ++j)
            if (!prow[j].is_zero())
                target[j] -= factor * prow[j];
    }

    /// Bland: entering column = smallest eligible index; leaving row =
    /// smallest basic index among the ratio-test minimizers.
    bool bland_iteration(int allowed_cols)
    {
        int enter = -1;
        for (int j = 0; j < allowed_cols; ++j) {
            if (objective_[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0)
            return false; // optimal

        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m_; ++i) {
            if (dead_[i] || tableau_[i][enter] <= 0)
                continue;
            Rational ratio = tableau_[i][n_ + m_] / tableau_[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leave < 0)
            throw Unbounded{};
        pivot(leave, enter);
        return true;
    }

    struct Unbounded {};

    /// Minimize the artificial sum; true iff it reaches zero.
    bool phase_one()
    {
        std::vector<Rational> cost(n_ + m_ + 1, Rational(0));
        for (int i = 0; i < m_; ++i)
            cost[n_ + i] = 1;
        objective_ = reduced_costs(cost);
        // artificials never enter: restrict Bland to structural columns
        try {
            while (bland_iteration(n_)) {
            }
        } catch (const Unbounded&) {
            throw std::logic_error("artificial objective is bounded below");
        }
        phase_one_objective_ = objective_;
        Rational w = -objective_[n_ + m_];
        if (!w.is_zero())
            return false;
        drive_out_artificials();
        return true;
    }

    void drive_out_artificials()
    {
        for (int i = 0; i < m_; ++i) {
            if (dead_[i] || basis_[i] < n_)
                continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (!tableau_[i][j].is_zero()) {
                    col = j;
                    break;
                }
            if (col >= 0)
                pivot(i, col);
            else
                dead_[i] = true; // redundant constraint
        }
    }

    bool phase_two()
    {
        std::vector<Rational> cost(n_ + m_ + 1, Rational(0));
        for (int j = 0; j < n_; ++j)
            cost[j] = sf_.cost[j];
        objective_ = reduced_costs(cost);
        try {
            while (bland_iteration(n_)) {
            }
        } catch (const Unbounded&) {
            return false;
        }
        return true;
    }

    std::vector<Rational> extract_point() const
    {
        std::vector<Rational> y(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (!dead_[i] && basis_[i] < n_)
                y[basis_[i]] = tableau_[i][n_ + m_];
        std::vector<Rational> x(problem_.num_vars);
        for (int j = 0; j < problem_.num_vars; ++j)
            x[j] = y[j] + problem_.lower(j);
        return x;
    }

    /**
     * Farkas multipliers from the phase-one optimum: with artificial costs
     * of one, y_i = 1 - (reduced cost of artificial i), re-sign-flipped to
     * the original row orientation.  Satisfies y.A <= 0 on shifted
     * variables and y.b > 0.
     */
    std::vector<Rational> farkas_certificate() const
    {
        std::vector<Rational> y(m_);
        for (int i = 0; i < m_; ++i) {
            Rational yi = 1 - phase_one_objective_[n_ + i];
            y[i] = row_flip_[i] ? -yi : yi;
        }
        return y;
    }

    LPProblem problem_;
    detail::StandardForm sf_;
    int m_ = 0, n_ = 0;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> objective_;
    std::vector<Rational> phase_one_objective_;
    std::vector<int> basis_;
    std::vector<bool> dead_;
    std::vector<bool> row_flip_;
    long long pivots_ = 0;
};

/// One-shot exact solve.
inline LPOutcome solve(const LPProblem& p)
{
    return SimplexSolver(p).run();
}

/// Exact re-substitution check for a claimed feasible point.
inline bool satisfies(const LPProblem& p, const std::vector<Rational>& x)
{
    if (static_cast<int>(x.size()) != p.num_vars)
        return false;
    for (int j = 0; j < p.num_vars; ++j) {
        if (x[j] < p.lower(j))
            return false;
        if (p.upper_bounds && x[j] > (*p.upper_bounds)[j])
            return false;
    }
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        Rational lhs = 0;
        for (int j = 0; j < p.num_vars; ++j)
            if (!p.rows[i][j].is_zero())
                lhs += p.rows[i][j] * x[j];
        if (lhs != p.rhs[i])
            return false;
    }
    return true;
}

/**
 * Mechanical check of a Farkas certificate: the aggregated row y.A must
 * have a finite supremum over the variable box that is strictly below
 * y.b, proving the equality system unsatisfiable.  The multiplier vector
 * covers the equality rows followed by the upper-bound rows when present.
 */
inline bool verify_farkas_certificate(const LPProblem& p, const std::vector<Rational>& y)
{
    const std::size_t num_eq = p.rows.size();
    const std::size_t num_bound = p.upper_bounds ? static_cast<std::size_t>(p.num_vars) : 0;
    if (y.size() != num_eq + num_bound)
        return false;

    // aggregated coefficients and right-hand side
    std::vector<Rational> d(p.num_vars, Rational(0));
    Rational rhs = 0;
    for (std::size_t i = 0; i < num_eq; ++i) {
        if (y[i].is_zero())
            continue;
        for (int j = 0; j < p.num_vars; ++j)
            if (!p.rows[i][j].is_zero())
                d[j] += y[i] * p.rows[i][j];
        rhs += y[i] * p.rhs[i];
    }
    // an upper-bound row x_j + s_j = u_j contributes to x_j and its slack
    std::vector<Rational> slack_coeff(num_bound, Rational(0));
    for (std::size_t k = 0; k < num_bound; ++k) {
        const Rational& mult = y[num_eq + k];
        if (mult.is_zero())
            continue;
        d[k] += mult;
        slack_coeff[k] = mult;
        rhs += mult * (*p.upper_bounds)[static_cast<int>(k)];
    }

    // sup of d.x over x_j >= lower_j (upper bounds already explicit rows;
    // slacks range over [0, inf))
    Rational sup = 0;
    for (int j = 0; j < p.num_vars; ++j) {
        if (d[j] > 0)
            return false; // unbounded above
        sup += d[j] * p.lower(j);
    }
    for (std::size_t k = 0; k < num_bound; ++k)
        if (slack_coeff[k] > 0)
            return false;
    return sup < rhs;
}

/// Exact rank by rational Gaussian elimination with sparsity-aware pivoting.
inline int rank(std::vector<std::vector<Rational>> m)
{
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("rank: ragged input");

    std::vector<int> nnz(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& entry : m[i])
            if (!entry.is_zero())
                ++nnz[i];

    std::vector<bool> used(m.size(), false);
    int r = 0;
    for (;;) {
        // sparsest remaining nonzero row as pivot row
        int prow = -1;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!used[i] && nnz[i] > 0 && (prow < 0 || nnz[i] < nnz[prow]))
                prow = static_cast<int>(i);
        if (prow < 0)
            break;
        int pcol = -1;
        for (std::size_t j = 0; j < cols; ++j)
            if (!m[prow][j].is_zero()) {
                pcol = static_cast<int>(j);
                break;
            }
        used[prow] = true;
        ++r;
        const Rational inv = 1 / m[prow][pcol];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (used[i] || m[i][pcol].is_zero())
                continue;
            const Rational factor = m[i][pcol] * inv;
            int delta = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (m[prow][j].is_zero())
                    continue;
                const bool was = !m[i][j].is_zero();
                m[i][j] -= factor * m[prow][j];
                const bool is = !m[i][j].is_zero();
                delta += static_cast<int>(is) - static_cast<int>(was);
            }
            nnz[i] += delta;
        }
    }
    return r;
}

} // namespace curv

#endif
