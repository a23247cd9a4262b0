#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"

using namespace amoeba;
using namespace corpus;

namespace {

PolyhedralComplex three_rays(const RatVector &base) {
    return complex_of(2, {ray(base, rat({1, 0})), ray(base, rat({0, 1})), ray(base, rat({-1, -1}))});
}

const LaurentPoly &line33() {
    static const auto f = parse_laurent("z*x1 + (z-1)*x2 + (z-2)", 2, Field::Qz);
    return f;
}

} // namespace

TEST(Psi, Examples) {
    // Terms in lexicographic order: constant, x2, x1.
    auto r = psi(line33(), Place::generic(), rat({0, 5}));
    EXPECT_EQ(r.value, 0);
    EXPECT_EQ(r.argmin, (std::vector<std::size_t>{0, 2}));
    // At z the heights are (0, 0, 1); (-2, -1) lies on the ray of A - e1
    // through (-1, 0) in direction -e1 - e2.
    r = psi(line33(), Place::parse("q:z"), rat({-2, -1}));
    EXPECT_EQ(r.value, -1);
    EXPECT_EQ(r.argmin, (std::vector<std::size_t>{1, 2}));
    r = psi(line33(), Place::parse("q:z"), rat({-1, -1}));
    EXPECT_EQ(r.argmin, (std::vector<std::size_t>{1}));
    r = psi(line33(), Place::generic(), rat({1000003, -999983}));
    EXPECT_EQ(r.argmin.size(), 1u);
}

TEST(Psi, ArchimedeanRejected) {
    try {
        tropical_data(line33(), Place::archimedean());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ArchimedeanNotSupported);
    }
    try {
        tropical_data(line33(), Place::prime(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::PlaceFieldMismatch);
    }
}

TEST(Trop, Examples) {
    EXPECT_TRUE(complex_equal(trop_hypersurface(line33(), Place::generic()), three_rays(rat({0, 0}))));
    EXPECT_TRUE(complex_equal(trop_hypersurface(line33(), Place::parse("q:z")), three_rays(rat({-1, 0}))));
    EXPECT_TRUE(complex_equal(trop_hypersurface(line33(), Place::parse("q:z-1")), three_rays(rat({0, -1}))));
    EXPECT_TRUE(complex_equal(trop_hypersurface(line33(), Place::parse("q:z-2")), three_rays(rat({1, 1}))));
    EXPECT_TRUE(complex_equal(trop_hypersurface(parse_laurent("x1 + x2 + 1", 2, Field::Q), Place::generic()),
                              three_rays(rat({0, 0}))));
    Polyhedron plane(2);
    plane.add_equality(rat({1, 2}), 0);
    const auto binomial = trop_hypersurface(parse_laurent("x1*x2^2 - 1", 2, Field::Q), Place::prime(5));
    EXPECT_TRUE(complex_equal(binomial, complex_of(2, {plane})));
}

TEST(Trop, Multiplicities) {
    // x1^2 + x2^2 + 1: each edge of the Newton triangle has lattice length 2.
    const auto c = trop_hypersurface(parse_laurent("x1^2 + x2^2 + 1", 2, Field::Q), Place::generic());
    for (const auto &cell : c.cells)
        EXPECT_EQ(cell.multiplicity, 2);
    EXPECT_TRUE(check_balancing(c).balanced);
}

TEST(Trop, OracleEquivalence) {
    Rng rng(51);
    for (const auto &inst : hypersurfaces()) {
        const auto f = inst.poly();
        for (const auto &p : oracle_places(f)) {
            const auto complex = trop_hypersurface(f, p);
            for (int k = 0; k < 200; ++k) {
                const RatVector v = k % 2 ? random_point(rng, f.rank()) : random_tie_point(rng, f, p);
                EXPECT_EQ(complex_membership(complex, v).has_value(), oracle_argmin_size(f, p, v) >= 2)
                    << inst.name << " at " << p.to_string();
            }
        }
    }
}

TEST(Trop, Purity) {
    Rng rng(52);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = uniform(rng, 1, 3);
        const auto f = random_poly(rng, n, uniform(rng, 2, 6), Field::Q, -2, 2);
        for (const auto &p : {Place::generic(), Place::prime(2), Place::prime(3)})
            for (const auto &cell : trop_hypersurface(f, p).cells) {
                EXPECT_EQ(cell.dimension, static_cast<int>(n) - 1);
                EXPECT_EQ(dimension(cell.polyhedron), static_cast<int>(n) - 1);
            }
    }
}

// Heights c_i + <u_i, w> translate the complex by -w.
TEST(Trop, TranslationEquivariance) {
    Rng rng(53);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = uniform(rng, 2, 3);
        const auto f = random_poly(rng, n, uniform(rng, 2, 5), Field::Q, -2, 2);
        const Place p = Place::prime(uniform(rng, 0, 1) ? 2 : 3);
        TropicalData data = tropical_data(f, p);
        RatVector w(n), minus_w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = uniform(rng, -4, 4);
            minus_w[i] = -w[i];
        }
        TropicalData moved = data;
        for (std::size_t i = 0; i < moved.heights.size(); ++i)
            for (std::size_t d = 0; d < n; ++d)
                moved.heights[i] += Rational(moved.exponents[i][d]) * w[d];
        EXPECT_TRUE(complex_equal(trop_hypersurface(moved), translated(trop_hypersurface(data), minus_w)));
    }
}

TEST(Trop, BalancingOnRandomInput) {
    Rng rng(54);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = uniform(rng, 2, 3);
        const auto f = random_poly(rng, n, uniform(rng, 3, 6), Field::Q, -1, 2);
        for (const auto &p : {Place::generic(), Place::prime(2), Place::prime(5)}) {
            const auto report = check_balancing(trop_hypersurface(f, p));
            EXPECT_TRUE(report.balanced) << f.to_string() << " at " << p.to_string();
        }
    }
}

// Off the skeleton the unique minimizer is a Newton vertex, and every vertex
// cone is reached.
TEST(Trop, GenericComplementMatchesVertices) {
    Rng rng(55);
    for (int k = 0; k < 30; ++k) {
        const std::size_t n = uniform(rng, 1, 3);
        const auto f = random_poly(rng, n, uniform(rng, 2, 6), Field::Q, -1, 2);
        const auto skeleton = generic_skeleton(f);
        const auto np = newton_polytope(f);
        std::set<std::size_t> vertices(np.vertex_indices.begin(), np.vertex_indices.end());
        std::set<std::size_t> seen;
        for (int j = 0; j < 400; ++j) {
            const RatVector v = random_point(rng, n);
            const auto r = psi(f, Place::generic(), v);
            if (r.argmin.size() != 1) {
                EXPECT_TRUE(complex_membership(skeleton, v).has_value());
                continue;
            }
            EXPECT_TRUE(vertices.contains(r.argmin[0]));
            seen.insert(r.argmin[0]);
        }
        EXPECT_EQ(seen, vertices) << f.to_string();
        EXPECT_TRUE(contains_zero(skeleton));
    }
}

TEST(Adelic, Examples) {
    const auto a = adelic_amoeba(line33());
    EXPECT_EQ(a.special.size(), 3u);
    for (const auto &[place, complex] : a.special)
        EXPECT_TRUE(contains_zero(complex)) << place.to_string();
    const auto pinched = adelic_amoeba(parse_laurent("x1*x2 - 2*x1 - 2*x2 + 1", 2, Field::Q));
    ASSERT_EQ(pinched.special.size(), 1u);
    EXPECT_EQ(pinched.special[0].first, Place::prime(2));
    EXPECT_TRUE(adelic_amoeba(parse_laurent("z*(x1 + x2 + 1)", 2, Field::Qz)).special.empty());
    EXPECT_TRUE(&a.at(Place::parse("q:z+7")) == &a.generic);
    try {
        a.at(Place::archimedean());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ArchimedeanNotSupported);
    }
}

TEST(ContainsZero, Examples) {
    EXPECT_FALSE(contains_zero(translated(three_rays(rat({-1, 0})), rat({5, 0}))));
    EXPECT_TRUE(contains_zero(three_rays(rat({1, 1}))));
}

TEST(ProjectComplex, Examples) {
    const auto four = prevariety(curve_in_three_space(), Place::generic());
    const auto image = project_complex(four, rows({{1, 0, 0}, {0, 1, 0}}));
    EXPECT_TRUE(complex_equal(image, three_rays(rat({0, 0}))));
    const auto c = three_rays(rat({2, 3}));
    EXPECT_TRUE(complex_equal(project_complex(c, rows({{1, 0}, {0, 1}})), c));
    Polyhedron plane(2);
    plane.add_equality(rat({1, 2}), 0);
    EXPECT_TRUE(complex_equal(project_complex(complex_of(2, {plane}), rows({{1, 0}})), complex_of(1, {Polyhedron(1)})));
}

// phi(prevariety of the system) lies in the prevariety of a subsystem
// defined through phi.
TEST(ProjectComplex, FunctorialContainment) {
    const IntMatrix phi = rows({{1, 0, 0}, {0, 1, 0}});
    const auto system = curve_in_three_space();
    const std::vector<PullbackConstraint> image = {
        identity_pullback(parse_laurent("x1 - x2 - 1", 2, Field::Qz))};
    for (const auto &p : {Place::generic(), Place::parse("q:z"), Place::infinity(), Place::parse("q:z-1")}) {
        const auto projected = project_complex(prevariety(system, p), phi);
        EXPECT_TRUE(complex_subset(projected, prevariety(image, p))) << p.to_string();
    }
    const IntMatrix psi4 = rows({{1, 0, 0, 0}, {0, 0, 1, 0}});
    const auto surface = surface_in_four_space();
    const std::vector<PullbackConstraint> image4 = {identity_pullback(surface[1].f)};
    for (const auto &p : {Place::generic(), Place::prime(2), Place::prime(3)})
        EXPECT_TRUE(complex_subset(project_complex(prevariety(surface, p), psi4), prevariety(image4, p)));
}

TEST(Prevariety, Examples) {
    const auto four = prevariety(curve_in_three_space(), Place::generic());
    const auto expected = complex_of(3, {ray(rat({0, 0, 0}), rat({1, 0, 0})), ray(rat({0, 0, 0}), rat({0, 1, 0})),
                                         ray(rat({0, 0, 0}), rat({0, 0, 1})),
                                         ray(rat({0, 0, 0}), rat({-1, -1, -1}))});
    EXPECT_TRUE(complex_equal(four, expected));

    const auto f = parse_laurent("x1*x2 - 2*x1 - 2*x2 + 1", 2, Field::Q);
    EXPECT_TRUE(complex_equal(prevariety({identity_pullback(f)}, Place::prime(2)),
                              trop_hypersurface(f, Place::prime(2))));

    const auto surface = surface_in_four_space();
    for (const auto &p : {Place::generic(), Place::prime(3), Place::prime(7)}) {
        const auto c = prevariety(surface, p);
        for (int k = 0; k < 4; ++k) {
            RatVector e(4, 0);
            e[k] = 1;
            EXPECT_TRUE(complex_subset(complex_of(4, {ray(RatVector(4, 0), e)}), c)) << p.to_string() << k;
        }
    }
}

TEST(Prevariety, ShapeErrors) {
    std::vector<PullbackConstraint> bad = {{parse_laurent("x1 - x2 - 1", 2, Field::Q), rows({{1, 0, 0}, {0, 1, 0}})},
                                           {parse_laurent("x1 - 1", 1, Field::Q), rows({{1, 0}})}};
    try {
        prevariety(bad, Place::generic());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    std::vector<PullbackConstraint> mono = {identity_pullback(parse_laurent("2*x1", 1, Field::Q))};
    try {
        prevariety(mono, Place::generic());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MonomialInput);
    }
}
