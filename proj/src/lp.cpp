// Exact two-phase simplex over the rationals with Bland's rule.
//
// A polyhedron {A x <= b, E x = d} with free x is brought to standard form
// min c.y, M y = r, y >= 0, r >= 0 with y = (x+, x-, slacks, artificials).

#include <algorithm>

#include "amoeba/polyhedral.hpp"

namespace amoeba {

namespace {

enum class SimplexOutcome { Optimal, Unbounded };

struct Tableau {
    std::vector<RatVector> rows;
    RatVector rhs;
    std::vector<std::size_t> basis;
    std::vector<bool> excluded; // columns that may not enter

    std::size_t num_cols() const { return excluded.size(); }

    void pivot(std::size_t r, std::size_t e) {
        Rational inv = 1 / rows[r][e];
        for (auto &x : rows[r])
            if (x != 0)
                x *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][e] == 0)
                continue;
            Rational f = rows[i][e];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (rows[r][j] != 0)
                    rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = e;
    }

    RatVector reduced_costs(const RatVector &cost) const {
        RatVector d(cost);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational &cb = cost[basis[r]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j < d.size(); ++j)
                if (rows[r][j] != 0)
                    d[j] -= cb * rows[r][j];
        }
        return d;
    }

    // Returns the entering column on unboundedness.
    std::pair<SimplexOutcome, std::size_t> run(const RatVector &cost) {
        RatVector d = reduced_costs(cost);
        while (true) {
            std::size_t e = num_cols();
            for (std::size_t j = 0; j < num_cols(); ++j) {
                if (!excluded[j] && d[j] < 0) {
                    e = j;
                    break;
                }
            }
            if (e == num_cols())
                return {SimplexOutcome::Optimal, 0};
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][e] <= 0)
                    continue;
                Rational ratio = rhs[r] / rows[r][e];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows.size())
                return {SimplexOutcome::Unbounded, e};
            pivot(leave, e);
            Rational f = d[e];
            for (std::size_t j = 0; j < d.size(); ++j)
                if (rows[leave][j] != 0)
                    d[j] -= f * rows[leave][j];
        }
    }
};

} // namespace

LpResult lp_solve(std::span<const Rational> objective, const Polyhedron &p, LpSense sense) {
    const std::size_t n = p.rank();
    if (objective.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "objective length " +
                                                      std::to_string(objective.size()) +
                                                      " does not match rank " + std::to_string(n));
    const auto &ineqs = p.inequalities();
    const auto &eqs = p.equalities();
    const std::size_t m = ineqs.size() + eqs.size();
    const std::size_t slack0 = 2 * n;
    const std::size_t art0 = slack0 + ineqs.size();

    std::vector<int> sign(m, 1);
    std::vector<bool> needs_artificial(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint &c = i < ineqs.size() ? ineqs[i] : eqs[i - ineqs.size()];
        if (c.rhs < 0)
            sign[i] = -1;
        needs_artificial[i] = i >= ineqs.size() || sign[i] < 0;
    }
    std::vector<std::size_t> art_col(m, 0);
    std::size_t ncols = art0;
    for (std::size_t i = 0; i < m; ++i)
        if (needs_artificial[i])
            art_col[i] = ncols++;

    Tableau t;
    t.rows.assign(m, RatVector(ncols, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, 0);
    t.excluded.assign(ncols, false);
    std::vector<std::size_t> initial_col(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Constraint &c = i < ineqs.size() ? ineqs[i] : eqs[i - ineqs.size()];
        for (std::size_t j = 0; j < n; ++j) {
            t.rows[i][j] = c.row[j] * sign[i];
            t.rows[i][n + j] = -c.row[j] * sign[i];
        }
        if (i < ineqs.size())
            t.rows[i][slack0 + i] = sign[i];
        t.rhs[i] = c.rhs * sign[i];
        if (needs_artificial[i]) {
            t.rows[i][art_col[i]] = 1;
            initial_col[i] = art_col[i];
        } else {
            initial_col[i] = slack0 + i;
        }
        t.basis[i] = initial_col[i];
    }

    LpResult result;
    auto extract_point = [&]() {
        RatVector y(ncols, Rational(0));
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            y[t.basis[r]] = t.rhs[r];
        RatVector x(n);
        for (std::size_t j = 0; j < n; ++j)
            x[j] = y[j] - y[n + j];
        return x;
    };

    // Phase 1.
    if (ncols > art0) {
        RatVector cost(ncols, Rational(0));
        for (std::size_t j = art0; j < ncols; ++j)
            cost[j] = 1;
        t.run(cost);
        Rational infeasibility = 0;
        for (std::size_t r = 0; r < m; ++r)
            infeasibility += cost[t.basis[r]] * t.rhs[r];
        if (infeasibility > 0) {
            result.status = LpStatus::Infeasible;
            result.farkas.assign(m, Rational(0));
            for (std::size_t i = 0; i < m; ++i) {
                Rational pi = 0;
                for (std::size_t r = 0; r < m; ++r)
                    pi += cost[t.basis[r]] * t.rows[r][initial_col[i]];
                result.farkas[i] = -pi * sign[i];
            }
            return result;
        }
        // Drive artificials out of the basis; drop redundant rows.
        for (std::size_t r = 0; r < t.rows.size();) {
            if (t.basis[r] < art0) {
                ++r;
                continue;
            }
            std::size_t e = art0;
            for (std::size_t j = 0; j < art0; ++j) {
                if (t.rows[r][j] != 0) {
                    e = j;
                    break;
                }
            }
            if (e < art0) {
                t.pivot(r, e);
                ++r;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<long>(r));
                t.rhs.erase(t.rhs.begin() + static_cast<long>(r));
                t.basis.erase(t.basis.begin() + static_cast<long>(r));
            }
        }
        for (std::size_t j = art0; j < ncols; ++j)
            t.excluded[j] = true;
    }

    // Phase 2 (minimize).
    RatVector cost(ncols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational c = sense == LpSense::Maximize ? Rational(-objective[j]) : objective[j];
        cost[j] = c;
        cost[n + j] = -c;
    }
    auto [outcome, entering] = t.run(cost);
    result.point = extract_point();
    if (outcome == SimplexOutcome::Unbounded) {
        RatVector dy(ncols, Rational(0));
        dy[entering] = 1;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            dy[t.basis[r]] = -t.rows[r][entering];
        result.ray.assign(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            result.ray[j] = dy[j] - dy[n + j];
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.value = 0;
    for (std::size_t j = 0; j < n; ++j)
        result.value += objective[j] * result.point[j];
    return result;
}

} // namespace amoeba
