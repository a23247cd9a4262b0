#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amoeba/lattice.hpp"

namespace amoeba {

/// row . v <= rhs (inequality) or row . v = rhs (equality). Rows are kept as
/// primitive integer vectors; rhs is rational.
struct Constraint {
    RatVector row;
    Rational rhs;

    friend bool operator==(const Constraint &, const Constraint &) = default;
};

/// Rational polyhedron in H-representation.
class Polyhedron {
  public:
    explicit Polyhedron(std::size_t rank = 0) : rank_(rank) {}
    Polyhedron(std::size_t rank, std::vector<Constraint> equalities,
               std::vector<Constraint> inequalities);

    static Polyhedron empty_set(std::size_t rank);

    std::size_t rank() const { return rank_; }
    const std::vector<Constraint> &equalities() const { return equalities_; }
    const std::vector<Constraint> &inequalities() const { return inequalities_; }

    Polyhedron &add_equality(RatVector row, Rational rhs);
    Polyhedron &add_inequality(RatVector row, Rational rhs);

    bool contains(std::span<const Rational> point) const;
    Polyhedron intersect(const Polyhedron &other) const;
    // P + w.
    Polyhedron translated(std::span<const Rational> w) const;

    friend bool operator==(const Polyhedron &, const Polyhedron &) = default;

  private:
    std::size_t rank_;
    std::vector<Constraint> equalities_;
    std::vector<Constraint> inequalities_;
};

enum class LpSense { Maximize, Minimize };
enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RatVector point; // feasible optimum (Optimal) or a feasible base point (Unbounded)
    RatVector ray;   // improving ray (Unbounded)
    // Infeasible: multipliers y >= 0 on inequalities then w on equalities with
    // y A + w E = 0 and y b + w d < 0.
    RatVector farkas;
};

/// Exact rational simplex (two phase, Bland's rule). DimensionMismatch if the
/// objective length differs from the rank.
LpResult lp_solve(std::span<const Rational> objective, const Polyhedron &p, LpSense sense);

bool is_empty(const Polyhedron &p);
std::optional<RatVector> feasible_point(const Polyhedron &p);
/// -1 if empty, otherwise the dimension of the affine hull.
int dimension(const Polyhedron &p);
/// Equations of the affine hull: explicit equalities plus implicit ones.
std::vector<Constraint> affine_hull(const Polyhedron &p);
std::optional<RatVector> relative_interior_point(const Polyhedron &p);

/// Implicit equalities promoted, redundant inequalities dropped, rows sorted.
/// Deterministic for a given input.
Polyhedron canonical_form(const Polyhedron &p);

/// Image phi(P) for a surjective integer matrix phi (m x n): change of
/// variables plus Fourier-Motzkin elimination with LP redundancy removal.
/// RankDeficient if phi does not have rank m.
Polyhedron project(const Polyhedron &p, const IntMatrix &phi);
/// { v : phi v in P } for P in R^m and phi m x n.
Polyhedron preimage(const Polyhedron &p, const IntMatrix &phi, std::size_t ncols);

bool is_subset(const Polyhedron &inner, const Polyhedron &outer);
bool equal_sets(const Polyhedron &a, const Polyhedron &b);
/// Exact test of P contained in the union of the cover, by recursive set
/// difference with strict inequalities decided by slack-maximizing LPs.
bool is_covered(const Polyhedron &p, std::span<const Polyhedron> cover);

using TieSet = std::vector<std::size_t>;

struct Cell {
    Polyhedron polyhedron;
    // One tie set per defining hypersurface (one entry for a hypersurface).
    std::vector<TieSet> tie_sets;
    std::int64_t multiplicity = 1;
    int dimension = -1;
};

struct PolyhedralComplex {
    std::size_t rank = 0;
    std::vector<Cell> cells;

    std::vector<Polyhedron> polyhedra() const;
};

/// First cell containing v.
std::optional<std::size_t> complex_membership(const PolyhedralComplex &c,
                                              std::span<const Rational> v);
/// Every cell of a is covered by the cells of b.
bool complex_subset(const PolyhedralComplex &a, const PolyhedralComplex &b);
bool complex_equal(const PolyhedralComplex &a, const PolyhedralComplex &b);
PolyhedralComplex translated(const PolyhedralComplex &c, std::span<const Rational> w);

/// Result of the multiplicity-weighted balancing check at the codimension-2
/// cells of a pure (n-1)-dimensional complex.
struct BalancingReport {
    bool balanced = true;
    std::size_t codim2_cells = 0;
    std::vector<std::string> failures;
};

BalancingReport check_balancing(const PolyhedralComplex &c);

} // namespace amoeba
