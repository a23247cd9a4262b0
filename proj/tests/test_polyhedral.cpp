#include <gtest/gtest.h>

#include "amoeba/json_io.hpp"
#include "corpus.hpp"

using namespace amoeba;
using namespace corpus;

namespace {

Polyhedron random_polyhedron(Rng &rng, std::size_t n) {
    Polyhedron p(n);
    const int m = uniform(rng, 0, 5);
    for (int k = 0; k < m; ++k) {
        RatVector row(n);
        for (auto &x : row)
            x = uniform(rng, -3, 3);
        if (uniform(rng, 0, 4) == 0)
            p.add_equality(row, uniform(rng, -2, 2));
        else
            p.add_inequality(row, uniform(rng, -2, 4));
    }
    return p;
}

IntMatrix random_surjection(Rng &rng, std::size_t m, std::size_t n) {
    while (true) {
        IntMatrix phi(m, IntVector(n));
        for (auto &row : phi)
            for (auto &x : row)
                x = uniform(rng, -2, 2);
        if (rank(phi) == m)
            return phi;
    }
}

} // namespace

TEST(Dimension, Examples) {
    Polyhedron diag(2);
    diag.add_equality(rat({1, -1}), 0);
    EXPECT_EQ(dimension(diag), 1);
    Polyhedron point(2);
    point.add_inequality(rat({1, 0}), 0).add_inequality(rat({-1, 0}), 0).add_equality(rat({0, 1}), 1);
    EXPECT_EQ(dimension(point), 0);
    EXPECT_EQ(dimension(Polyhedron::empty_set(2)), -1);
    EXPECT_EQ(dimension(Polyhedron(3)), 3);
}

TEST(Dimension, MonotoneUnderConstraints) {
    Rng rng(41);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = uniform(rng, 1, 4);
        Polyhedron p = random_polyhedron(rng, n);
        int previous = dimension(p);
        for (int j = 0; j < 3; ++j) {
            RatVector row(n);
            for (auto &x : row)
                x = uniform(rng, -2, 2);
            p.add_inequality(row, uniform(rng, -1, 2));
            const int d = dimension(p);
            EXPECT_LE(d, previous);
            previous = d;
        }
    }
}

TEST(RelativeInterior, PointIsInsideAndStrict) {
    Rng rng(42);
    for (int k = 0; k < 100; ++k) {
        const Polyhedron p = random_polyhedron(rng, uniform(rng, 1, 3));
        const auto x = relative_interior_point(p);
        if (dimension(p) < 0) {
            EXPECT_FALSE(x.has_value());
            continue;
        }
        ASSERT_TRUE(x.has_value());
        EXPECT_TRUE(p.contains(*x));
        // A tight inequality must be tight on all of P.
        for (const auto &c : p.inequalities()) {
            if (dot(c.row, *x) < c.rhs)
                continue;
            const auto low = lp_solve(c.row, p, LpSense::Minimize);
            ASSERT_EQ(low.status, LpStatus::Optimal);
            EXPECT_EQ(low.value, c.rhs);
        }
    }
}

TEST(Project, Examples) {
    Polyhedron diag(2);
    diag.add_equality(rat({1, -1}), 0);
    const IntMatrix first = rows({{1, 0}});
    EXPECT_TRUE(equal_sets(project(diag, first), Polyhedron(1)));

    Polyhedron strip(2);
    strip.add_inequality(rat({-1, 0}), 0).add_inequality(rat({1, 0}), 1).add_equality(rat({0, 1}), 3);
    Polyhedron unit(1);
    unit.add_inequality(rat({-1}), 0).add_inequality(rat({1}), 1);
    EXPECT_TRUE(equal_sets(project(strip, first), unit));

    const auto r = project(ray(rat({0, 0, 0}), rat({1, 1, 1})), rows({{1, 0, 0}, {0, 1, 0}}));
    EXPECT_TRUE(equal_sets(r, ray(rat({0, 0}), rat({1, 1}))));

    try {
        project(diag, rows({{1, 0}, {2, 0}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
}

TEST(Preimage, Examples) {
    Polyhedron zero(1);
    zero.add_equality(rat({1}), 0);
    Polyhedron expected(2);
    expected.add_equality(rat({1, 0}), 0);
    EXPECT_TRUE(equal_sets(preimage(zero, rows({{1, 0}}), 2), expected));
    EXPECT_TRUE(equal_sets(preimage(Polyhedron(1), rows({{3, -2, 1}}), 3), Polyhedron(3)));
}

// phi(phi^{-1}(P)) = P for surjective phi.
TEST(Project, RoundTripsPreimage) {
    Rng rng(43);
    for (int k = 0; k < 50; ++k) {
        const std::size_t m = uniform(rng, 1, 3), n = m + uniform(rng, 0, 2);
        const Polyhedron p = random_polyhedron(rng, m);
        const IntMatrix phi = random_surjection(rng, m, n);
        const Polyhedron back = project(preimage(p, phi, n), phi);
        EXPECT_TRUE(is_subset(back, p) && is_subset(p, back)) << k;
    }
}

TEST(Cover, UnionOfHalfplanes) {
    Polyhedron left(2), right(2), box(2);
    left.add_inequality(rat({1, 0}), 0);
    right.add_inequality(rat({-1, 0}), 0);
    box.add_inequality(rat({1, 0}), 1).add_inequality(rat({-1, 0}), 1);
    const std::vector<Polyhedron> both = {left, right};
    EXPECT_TRUE(is_covered(box, both));
    Polyhedron right_open(2);
    right_open.add_inequality(rat({-1, 0}), -1);
    const std::vector<Polyhedron> gap = {left, right_open};
    EXPECT_FALSE(is_covered(box, gap));
}

TEST(Complex, EqualityIgnoresSubdivision) {
    const auto whole = complex_of(2, {line(rat({0, 0}), rat({1, 0}))});
    const auto halves = complex_of(2, {ray(rat({0, 0}), rat({1, 0})), ray(rat({0, 0}), rat({-1, 0}))});
    EXPECT_TRUE(complex_equal(whole, halves));
    const auto shifted = translated(halves, rat({0, 1}));
    EXPECT_FALSE(complex_equal(whole, shifted));
    EXPECT_TRUE(complex_subset(complex_of(2, {ray(rat({0, 0}), rat({1, 0}))}), whole));
}

TEST(Complex, JsonRoundTrip) {
    const auto c = trop_hypersurface(parse_laurent("x1*x2 - 2*x1 - 2*x2 + 1", 2, Field::Q), Place::prime(2));
    const auto back = complex_from_json(to_json(c));
    EXPECT_EQ(to_json(back), to_json(c));
    EXPECT_TRUE(complex_equal(back, c));
}

TEST(Balancing, DetectsImbalance) {
    // Three rays from the origin in directions e1, e2 and -e1 do not balance.
    auto bad = complex_of(2, {ray(rat({0, 0}), rat({1, 0})), ray(rat({0, 0}), rat({0, 1})),
                              ray(rat({0, 0}), rat({-1, 0}))});
    for (auto &cell : bad.cells)
        cell.dimension = 1;
    const auto report = check_balancing(bad);
    EXPECT_FALSE(report.balanced);
    EXPECT_EQ(report.codim2_cells, 1u);

    auto good = complex_of(2, {ray(rat({0, 0}), rat({1, 0})), ray(rat({0, 0}), rat({0, 1})),
                               ray(rat({0, 0}), rat({-1, -1}))});
    for (auto &cell : good.cells)
        cell.dimension = 1;
    EXPECT_TRUE(check_balancing(good).balanced);
}
