#include "amoeba/polyhedral.hpp"

#include <algorithm>

namespace amoeba {

namespace {

bool row_less(const RatVector &a, const RatVector &b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

bool constraint_less(const Constraint &a, const Constraint &b) {
    if (a.row != b.row)
        return row_less(a.row, b.row);
    return a.rhs < b.rhs;
}

bool is_zero_row(const RatVector &row) {
    return std::all_of(row.begin(), row.end(), [](const Rational &x) { return x == 0; });
}

// Scale by a positive factor so the row is a primitive integer vector.
Constraint normalized(Constraint c) {
    if (is_zero_row(c.row))
        return c;
    Integer l = 1;
    for (const auto &x : c.row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Integer g = 0;
    for (const auto &x : c.row) {
        Integer v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational factor = make_rational(l, g);
    for (auto &x : c.row)
        x *= factor;
    c.rhs *= factor;
    return c;
}

Constraint negated(Constraint c) {
    for (auto &x : c.row)
        x = -x;
    c.rhs = -c.rhs;
    return c;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += a[i] * b[i];
    return s;
}

const Constraint kInfeasible{{}, Rational(-1)};

} // namespace

Polyhedron::Polyhedron(std::size_t rank, std::vector<Constraint> equalities,
                       std::vector<Constraint> inequalities)
    : rank_(rank) {
    bool infeasible = false;
    for (auto &c : equalities) {
        if (c.row.size() != rank)
            throw Error(ErrorCode::DimensionMismatch, "constraint row length does not match rank");
        Constraint e = normalized(std::move(c));
        if (is_zero_row(e.row)) {
            infeasible |= e.rhs != 0;
            continue;
        }
        auto first = std::find_if(e.row.begin(), e.row.end(), [](const Rational &x) { return x != 0; });
        if (*first < 0)
            e = negated(std::move(e));
        equalities_.push_back(std::move(e));
    }
    for (auto &c : inequalities) {
        if (c.row.size() != rank)
            throw Error(ErrorCode::DimensionMismatch, "constraint row length does not match rank");
        Constraint e = normalized(std::move(c));
        if (is_zero_row(e.row)) {
            infeasible |= e.rhs < 0;
            continue;
        }
        inequalities_.push_back(std::move(e));
    }
    std::sort(equalities_.begin(), equalities_.end(), constraint_less);
    equalities_.erase(std::unique(equalities_.begin(), equalities_.end()), equalities_.end());
    // Parallel inequality rows: only the tightest survives.
    std::sort(inequalities_.begin(), inequalities_.end(), constraint_less);
    inequalities_.erase(std::unique(inequalities_.begin(), inequalities_.end(),
                                    [](const Constraint &a, const Constraint &b) { return a.row == b.row; }),
                        inequalities_.end());
    if (infeasible) {
        equalities_.clear();
        inequalities_.assign(1, Constraint{RatVector(rank, Rational(0)), Rational(-1)});
    }
}

Polyhedron Polyhedron::empty_set(std::size_t rank) {
    Polyhedron p(rank);
    p.inequalities_.assign(1, Constraint{RatVector(rank, Rational(0)), Rational(-1)});
    return p;
}

Polyhedron &Polyhedron::add_equality(RatVector row, Rational rhs) {
    auto eqs = equalities_;
    eqs.push_back({std::move(row), std::move(rhs)});
    *this = Polyhedron(rank_, std::move(eqs), inequalities_);
    return *this;
}

Polyhedron &Polyhedron::add_inequality(RatVector row, Rational rhs) {
    auto ineqs = inequalities_;
    ineqs.push_back({std::move(row), std::move(rhs)});
    *this = Polyhedron(rank_, equalities_, std::move(ineqs));
    return *this;
}

bool Polyhedron::contains(std::span<const Rational> point) const {
    if (point.size() != rank_)
        throw Error(ErrorCode::DimensionMismatch, "point length does not match rank");
    for (const auto &c : equalities_)
        if (dot(c.row, point) != c.rhs)
            return false;
    for (const auto &c : inequalities_)
        if (dot(c.row, point) > c.rhs)
            return false;
    return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron &other) const {
    if (other.rank_ != rank_)
        throw Error(ErrorCode::DimensionMismatch, "intersecting polyhedra of different rank");
    auto eqs = equalities_;
    eqs.insert(eqs.end(), other.equalities_.begin(), other.equalities_.end());
    auto ineqs = inequalities_;
    ineqs.insert(ineqs.end(), other.inequalities_.begin(), other.inequalities_.end());
    return Polyhedron(rank_, std::move(eqs), std::move(ineqs));
}

Polyhedron Polyhedron::translated(std::span<const Rational> w) const {
    if (w.size() != rank_)
        throw Error(ErrorCode::DimensionMismatch, "translation length does not match rank");
    auto shift = [&](std::vector<Constraint> cs) {
        for (auto &c : cs)
            c.rhs += dot(c.row, w);
        return cs;
    };
    return Polyhedron(rank_, shift(equalities_), shift(inequalities_));
}

// ---------------------------------------------------------------------------
// LP-based queries

std::optional<RatVector> feasible_point(const Polyhedron &p) {
    RatVector zero(p.rank(), Rational(0));
    LpResult r = lp_solve(zero, p, LpSense::Maximize);
    if (r.status == LpStatus::Infeasible)
        return std::nullopt;
    return r.point;
}

bool is_empty(const Polyhedron &p) { return !feasible_point(p).has_value(); }

namespace {

// max t subject to the equalities, inequalities with `slacked[i]` tightened by
// t, the rest as given, and t <= 1. Returns (t*, v*) or nullopt if infeasible.
std::optional<std::pair<Rational, RatVector>>
max_slack(std::size_t n, const std::vector<Constraint> &eqs, const std::vector<Constraint> &ineqs,
          const std::vector<bool> &slacked) {
    std::vector<Constraint> e2, i2;
    for (const auto &c : eqs) {
        RatVector row(c.row);
        row.push_back(0);
        e2.push_back({std::move(row), c.rhs});
    }
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        RatVector row(ineqs[i].row);
        row.push_back(slacked[i] ? 1 : 0);
        i2.push_back({std::move(row), ineqs[i].rhs});
    }
    RatVector cap(n + 1, Rational(0));
    cap[n] = 1;
    i2.push_back({cap, Rational(1)});
    Polyhedron lifted(n + 1, std::move(e2), std::move(i2));
    LpResult r = lp_solve(cap, lifted, LpSense::Maximize);
    if (r.status != LpStatus::Optimal)
        return std::nullopt;
    RatVector v(r.point.begin(), r.point.begin() + static_cast<long>(n));
    return std::make_pair(r.value, std::move(v));
}

// Splits inequalities into implicit equalities and the rest. Requires p nonempty.
std::pair<std::vector<Constraint>, std::vector<Constraint>> split_implicit(const Polyhedron &p) {
    const auto &ineqs = p.inequalities();
    std::vector<Constraint> implicit, strict;
    if (ineqs.empty())
        return {implicit, strict};
    auto all = max_slack(p.rank(), p.equalities(), ineqs, std::vector<bool>(ineqs.size(), true));
    if (all && all->first > 0)
        return {implicit, ineqs};
    for (const auto &c : ineqs) {
        LpResult r = lp_solve(c.row, p, LpSense::Minimize);
        if (r.status == LpStatus::Optimal && r.value == c.rhs)
            implicit.push_back(c);
        else
            strict.push_back(c);
    }
    return {implicit, strict};
}

} // namespace

std::vector<Constraint> affine_hull(const Polyhedron &p) {
    auto [implicit, rest] = split_implicit(p);
    std::vector<Constraint> hull = p.equalities();
    hull.insert(hull.end(), implicit.begin(), implicit.end());
    return hull;
}

int dimension(const Polyhedron &p) {
    if (is_empty(p))
        return -1;
    std::vector<RatVector> rows;
    for (const auto &c : affine_hull(p))
        rows.push_back(c.row);
    return static_cast<int>(p.rank() - rank(rows));
}

std::optional<RatVector> relative_interior_point(const Polyhedron &p) {
    if (is_empty(p))
        return std::nullopt;
    auto [implicit, rest] = split_implicit(p);
    std::vector<Constraint> eqs = p.equalities();
    eqs.insert(eqs.end(), implicit.begin(), implicit.end());
    auto r = max_slack(p.rank(), eqs, rest, std::vector<bool>(rest.size(), true));
    if (!r)
        throw Error(ErrorCode::InvariantFailure, "relative interior LP failed on a nonempty polyhedron");
    return r->second;
}

namespace {

// Drops inequalities implied by the others (sequential LP necessity test).
std::vector<Constraint> drop_redundant(std::size_t n, const std::vector<Constraint> &eqs,
                                       std::vector<Constraint> ineqs) {
    for (std::size_t i = 0; i < ineqs.size();) {
        std::vector<Constraint> others;
        for (std::size_t j = 0; j < ineqs.size(); ++j)
            if (j != i)
                others.push_back(ineqs[j]);
        Polyhedron q(n, eqs, others);
        LpResult r = lp_solve(ineqs[i].row, q, LpSense::Maximize);
        if (r.status == LpStatus::Optimal && r.value <= ineqs[i].rhs)
            ineqs.erase(ineqs.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return ineqs;
}

// Reduced row echelon basis of the equality system, rows primitive.
std::vector<Constraint> echelon_equalities(std::size_t n, std::vector<Constraint> eqs) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < eqs.size(); ++col) {
        std::size_t piv = r;
        while (piv < eqs.size() && eqs[piv].row[col] == 0)
            ++piv;
        if (piv == eqs.size())
            continue;
        std::swap(eqs[r], eqs[piv]);
        Rational inv = 1 / eqs[r].row[col];
        for (auto &x : eqs[r].row)
            x *= inv;
        eqs[r].rhs *= inv;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i == r || eqs[i].row[col] == 0)
                continue;
            Rational f = eqs[i].row[col];
            for (std::size_t j = 0; j < n; ++j)
                eqs[i].row[j] -= f * eqs[r].row[j];
            eqs[i].rhs -= f * eqs[r].rhs;
        }
        ++r;
    }
    eqs.resize(r);
    return eqs;
}

} // namespace

Polyhedron canonical_form(const Polyhedron &p) {
    if (is_empty(p))
        return Polyhedron::empty_set(p.rank());
    auto [implicit, rest] = split_implicit(p);
    std::vector<Constraint> eqs = p.equalities();
    eqs.insert(eqs.end(), implicit.begin(), implicit.end());
    eqs = echelon_equalities(p.rank(), std::move(eqs));
    // Normalize first so duplicates collapse before the LP pass.
    Polyhedron staged(p.rank(), eqs, rest);
    auto kept = drop_redundant(p.rank(), staged.equalities(), staged.inequalities());
    return Polyhedron(p.rank(), staged.equalities(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Projection and pullback

Polyhedron project(const Polyhedron &p, const IntMatrix &phi) {
    const std::size_t n = p.rank();
    const std::size_t m = phi.size();
    for (const auto &row : phi)
        if (row.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "projection matrix has wrong column count");
    if (rank(phi) != m)
        throw Error(ErrorCode::RankDeficient, "projection matrix is not surjective");
    if (is_empty(p))
        return Polyhedron::empty_set(m);

    const std::size_t total = m + n;
    auto lift = [&](const Constraint &c) {
        RatVector row(total, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            row[m + j] = c.row[j];
        return Constraint{std::move(row), c.rhs};
    };
    std::vector<Constraint> eqs, ineqs;
    for (const auto &c : p.equalities())
        eqs.push_back(lift(c));
    for (const auto &c : p.inequalities())
        ineqs.push_back(lift(c));
    for (std::size_t i = 0; i < m; ++i) {
        RatVector row(total, Rational(0));
        row[i] = 1;
        for (std::size_t j = 0; j < n; ++j)
            row[m + j] = -Rational(phi[i][j]);
        eqs.push_back({std::move(row), Rational(0)});
    }

    for (std::size_t k = total; k-- > m;) {
        auto eq_it = std::find_if(eqs.begin(), eqs.end(), [&](const Constraint &c) { return c.row[k] != 0; });
        if (eq_it != eqs.end()) {
            Constraint pivot = *eq_it;
            eqs.erase(eq_it);
            auto substitute = [&](Constraint &c) {
                if (c.row[k] == 0)
                    return;
                Rational f = c.row[k] / pivot.row[k];
                for (std::size_t j = 0; j < total; ++j)
                    c.row[j] -= f * pivot.row[j];
                c.rhs -= f * pivot.rhs;
            };
            for (auto &c : eqs)
                substitute(c);
            for (auto &c : ineqs)
                substitute(c);
        } else {
            std::vector<Constraint> pos, neg, next;
            for (auto &c : ineqs) {
                if (c.row[k] > 0)
                    pos.push_back(std::move(c));
                else if (c.row[k] < 0)
                    neg.push_back(std::move(c));
                else
                    next.push_back(std::move(c));
            }
            for (const auto &a : pos) {
                for (const auto &b : neg) {
                    Rational wa = -b.row[k];
                    Rational wb = a.row[k];
                    RatVector row(total);
                    for (std::size_t j = 0; j < total; ++j)
                        row[j] = wa * a.row[j] + wb * b.row[j];
                    row[k] = 0;
                    next.push_back({std::move(row), wa * a.rhs + wb * b.rhs});
                }
            }
            ineqs = std::move(next);
        }
        Polyhedron staged(total, eqs, ineqs);
        if (is_empty(staged))
            return Polyhedron::empty_set(m);
        eqs = staged.equalities();
        ineqs = drop_redundant(total, eqs, staged.inequalities());
    }
    auto shrink = [&](const std::vector<Constraint> &cs) {
        std::vector<Constraint> out;
        for (const auto &c : cs)
            out.push_back({RatVector(c.row.begin(), c.row.begin() + static_cast<long>(m)), c.rhs});
        return out;
    };
    return canonical_form(Polyhedron(m, shrink(eqs), shrink(ineqs)));
}

Polyhedron preimage(const Polyhedron &p, const IntMatrix &phi, std::size_t ncols) {
    if (phi.size() != p.rank())
        throw Error(ErrorCode::DimensionMismatch, "pullback matrix row count does not match rank");
    for (const auto &row : phi)
        if (row.size() != ncols)
            throw Error(ErrorCode::DimensionMismatch, "pullback matrix has ragged rows");
    auto pull = [&](const std::vector<Constraint> &cs) {
        std::vector<Constraint> out;
        for (const auto &c : cs) {
            RatVector row(ncols, Rational(0));
            for (std::size_t i = 0; i < phi.size(); ++i)
                if (c.row[i] != 0)
                    for (std::size_t j = 0; j < ncols; ++j)
                        row[j] += c.row[i] * phi[i][j];
            out.push_back({std::move(row), c.rhs});
        }
        return out;
    };
    return Polyhedron(ncols, pull(p.equalities()), pull(p.inequalities()));
}

// ---------------------------------------------------------------------------
// Inclusion

bool is_subset(const Polyhedron &inner, const Polyhedron &outer) {
    if (inner.rank() != outer.rank())
        throw Error(ErrorCode::DimensionMismatch, "comparing polyhedra of different rank");
    if (is_empty(inner))
        return true;
    for (const auto &c : outer.inequalities()) {
        LpResult r = lp_solve(c.row, inner, LpSense::Maximize);
        if (r.status != LpStatus::Optimal || r.value > c.rhs)
            return false;
    }
    for (const auto &c : outer.equalities()) {
        for (auto sense : {LpSense::Maximize, LpSense::Minimize}) {
            LpResult r = lp_solve(c.row, inner, sense);
            if (r.status != LpStatus::Optimal || r.value != c.rhs)
                return false;
        }
    }
    return true;
}

bool equal_sets(const Polyhedron &a, const Polyhedron &b) {
    return is_subset(a, b) && is_subset(b, a);
}

namespace {

// Closed constraints plus strict ones (row . v < rhs).
struct Region {
    Polyhedron closed;
    std::vector<Constraint> strict;
};

bool region_feasible(const Region &r) {
    if (r.strict.empty())
        return !is_empty(r.closed);
    std::vector<Constraint> ineqs = r.closed.inequalities();
    std::vector<bool> slacked(ineqs.size(), false);
    for (const auto &c : r.strict) {
        ineqs.push_back(c);
        slacked.push_back(true);
    }
    auto s = max_slack(r.closed.rank(), r.closed.equalities(), ineqs, slacked);
    return s && s->first > 0;
}

std::vector<Region> subtract(const Region &r, const Polyhedron &q) {
    if (!region_feasible(Region{r.closed.intersect(q), r.strict}))
        return {r};
    std::vector<Constraint> parts = q.inequalities();
    for (const auto &c : q.equalities()) {
        parts.push_back(c);
        parts.push_back(negated(c));
    }
    std::vector<Region> out;
    Polyhedron prefix = r.closed;
    for (const auto &c : parts) {
        Region piece{prefix, r.strict};
        piece.strict.push_back(negated(c)); // row . v > rhs
        if (region_feasible(piece))
            out.push_back(std::move(piece));
        prefix = prefix.intersect(Polyhedron(prefix.rank(), {}, {c}));
    }
    return out;
}

} // namespace

bool is_covered(const Polyhedron &p, std::span<const Polyhedron> cover) {
    std::vector<Region> pieces;
    if (!is_empty(p))
        pieces.push_back(Region{p, {}});
    for (const auto &q : cover) {
        if (pieces.empty())
            break;
        if (q.rank() != p.rank())
            throw Error(ErrorCode::DimensionMismatch, "cover polyhedron has different rank");
        std::vector<Region> next;
        for (const auto &piece : pieces) {
            auto rest = subtract(piece, q);
            next.insert(next.end(), std::make_move_iterator(rest.begin()),
                        std::make_move_iterator(rest.end()));
        }
        pieces = std::move(next);
    }
    return pieces.empty();
}

// ---------------------------------------------------------------------------
// Complexes

std::vector<Polyhedron> PolyhedralComplex::polyhedra() const {
    std::vector<Polyhedron> out;
    out.reserve(cells.size());
    for (const auto &c : cells)
        out.push_back(c.polyhedron);
    return out;
}

std::optional<std::size_t> complex_membership(const PolyhedralComplex &c,
                                              std::span<const Rational> v) {
    if (v.size() != c.rank)
        throw Error(ErrorCode::DimensionMismatch, "point length does not match complex rank");
    for (std::size_t i = 0; i < c.cells.size(); ++i)
        if (c.cells[i].polyhedron.contains(v))
            return i;
    return std::nullopt;
}

bool complex_subset(const PolyhedralComplex &a, const PolyhedralComplex &b) {
    if (a.rank != b.rank)
        throw Error(ErrorCode::DimensionMismatch, "comparing complexes of different rank");
    auto cover = b.polyhedra();
    return std::all_of(a.cells.begin(), a.cells.end(),
                       [&](const Cell &cell) { return is_covered(cell.polyhedron, cover); });
}

bool complex_equal(const PolyhedralComplex &a, const PolyhedralComplex &b) {
    return complex_subset(a, b) && complex_subset(b, a);
}

PolyhedralComplex translated(const PolyhedralComplex &c, std::span<const Rational> w) {
    PolyhedralComplex out = c;
    for (auto &cell : out.cells)
        cell.polyhedron = cell.polyhedron.translated(w);
    return out;
}

BalancingReport check_balancing(const PolyhedralComplex &c) {
    BalancingReport report;
    const std::size_t n = c.rank;
    if (n < 2)
        return report;
    std::vector<const Cell *> maximal;
    for (const auto &cell : c.cells)
        if (cell.dimension == static_cast<int>(n) - 1)
            maximal.push_back(&cell);

    std::vector<Polyhedron> ridges;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            Polyhedron meet = maximal[i]->polyhedron.intersect(maximal[j]->polyhedron);
            if (dimension(meet) != static_cast<int>(n) - 2)
                continue;
            bool seen = std::any_of(ridges.begin(), ridges.end(),
                                    [&](const Polyhedron &r) { return equal_sets(r, meet); });
            if (!seen)
                ridges.push_back(std::move(meet));
        }
    }
    report.codim2_cells = ridges.size();

    for (const auto &ridge : ridges) {
        RatVector p = *relative_interior_point(ridge);
        IntMatrix hull;
        for (const auto &eq : affine_hull(ridge))
            hull.push_back(primitive_integer(std::span<const Rational>(eq.row)));
        IntMatrix basis = saturate(hull, n);
        if (basis.size() != 2) {
            report.balanced = false;
            report.failures.push_back("ridge with annihilator of rank " + std::to_string(basis.size()));
            continue;
        }
        std::vector<Integer> sum(2, 0);
        std::size_t adjacent = 0;
        for (const Cell *sigma : maximal) {
            if (!is_subset(ridge, sigma->polyhedron))
                continue;
            ++adjacent;
            RatVector q = *relative_interior_point(sigma->polyhedron);
            RatVector d(n);
            for (std::size_t k = 0; k < n; ++k)
                d[k] = q[k] - p[k];
            RatVector image = amoeba::apply(basis, d);
            IntVector w = primitive_integer(std::span<const Rational>(image));
            for (std::size_t k = 0; k < 2; ++k)
                sum[k] += w[k] * sigma->multiplicity;
        }
        if (sum[0] != 0 || sum[1] != 0) {
            report.balanced = false;
            std::string at;
            for (const auto &x : p)
                at += (at.empty() ? "" : ",") + to_string(x);
            report.failures.push_back("unbalanced at (" + at + "): residual (" + to_string(sum[0]) +
                                      "," + to_string(sum[1]) + ") over " +
                                      std::to_string(adjacent) + " cells");
        }
    }
    return report;
}

} // namespace amoeba
