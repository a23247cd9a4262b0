#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace amoeba;
using namespace corpus;

namespace {

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InvariantFailure;
}

// Indices minimizing <u_i, v>, computed directly.
std::vector<std::size_t> linear_argmin(const LaurentPoly &f, const IntVector &v) {
    std::vector<std::size_t> out;
    Integer best;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer s = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
            s += Integer(f.term(i).exponent[k]) * Integer(v[k]);
        if (out.empty() || s < best) {
            best = s;
            out = {i};
        } else if (s == best) {
            out.push_back(i);
        }
    }
    return out;
}

IntVector random_direction(Rng &rng, std::size_t n) {
    IntVector v(n);
    while (std::all_of(v.begin(), v.end(), [](const Integer &x) { return x == 0; }))
        for (auto &x : v)
            x = uniform(rng, -3, 3);
    return v;
}

// Places where random_function can have zeros or poles.
std::vector<Place> function_places() {
    std::vector<Place> out = {Place::infinity()};
    for (long k = -2; k <= 2; ++k)
        out.push_back(Place::irreducible(Poly({Rational(-k), Rational(1)})));
    return out;
}

// f with every coefficient a rational multiple of one common function.
LaurentPoly constant_ratio_poly(Rng &rng, std::size_t n, std::size_t s) {
    const RationalFunction common = random_function(rng);
    const LaurentPoly g = random_poly(rng, n, s, Field::Q);
    std::vector<Term> terms;
    for (const auto &t : g.terms())
        terms.push_back({t.exponent, Scalar(RationalFunction(t.coefficient.rational()) * common)});
    return LaurentPoly(n, Field::Qz, terms);
}

RatVector mapped(const IntMatrix &m, const RatVector &x) {
    RatVector out;
    for (const auto &row : m) {
        Rational s = 0;
        for (std::size_t k = 0; k < x.size(); ++k)
            s += Rational(row[k]) * x[k];
        out.push_back(s);
    }
    return out;
}

ArchScanOptions quick_scan() {
    ArchScanOptions options;
    options.points = 8;
    options.sampling.trials = 40;
    return options;
}

} // namespace

TEST(Halfspace, Validation) {
    EXPECT_EQ(code_of([] { make_halfspace(rows({{1, 1}}), IntVector{2, 2}); }), ErrorCode::DependentDirection);
    EXPECT_EQ(code_of([] { make_halfspace({}, IntVector{0, 0}); }), ErrorCode::DependentDirection);
    EXPECT_EQ(code_of([] { make_halfspace(rows({{1, 0, 0}}), IntVector{0, 1}); }), ErrorCode::DimensionMismatch);
    // Dependent boundary generators are dropped.
    EXPECT_EQ(make_halfspace(rows({{0, 0, 1}, {0, 0, 2}}), IntVector{1, 1, 0}).boundary.size(), 1u);
}

TEST(QuotientMap, Examples) {
    EXPECT_EQ(quotient_map(make_halfspace(rows({{0, 0, 1}}), IntVector{1, 1, 0})).phi, rows({{1, 0, 0}, {0, 1, 0}}));
    const auto diag = quotient_map(make_halfspace(rows({{1, 1}}), IntVector{1, 0}));
    ASSERT_EQ(diag.phi.size(), 1u);
    EXPECT_TRUE(diag.phi[0] == (IntVector{1, -1}) || diag.phi[0] == (IntVector{-1, 1}));
    EXPECT_EQ(quotient_map(make_halfspace({}, IntVector{1, 2, 3})).phi, rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

// The kernel of phi is exactly the span of the boundary: the preimage of 0
// contains every boundary combination and has the boundary's dimension, and
// phi has an integer right inverse.
TEST(QuotientMap, KernelIsBoundarySpan) {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = uniform(rng, 2, 4);
        const std::size_t k = uniform(rng, 0, n - 1);
        IntMatrix boundary;
        for (std::size_t j = 0; j < k; ++j)
            boundary.push_back(random_direction(rng, n));
        if (rank(boundary) != k)
            continue;
        IntVector v = random_direction(rng, n);
        IntMatrix with_v = boundary;
        with_v.push_back(v);
        if (rank(with_v) != k + 1)
            continue;
        const auto q = quotient_map(make_halfspace(boundary, v));
        ASSERT_EQ(q.phi.size(), n - k);
        for (const auto &g : boundary) {
            RatVector gr(g.begin(), g.end());
            for (const auto &x : mapped(q.phi, gr))
                EXPECT_EQ(x, 0);
        }
        for (std::size_t i = 0; i < n - k; ++i)
            for (std::size_t j = 0; j < n - k; ++j) {
                Integer s = 0;
                for (std::size_t a = 0; a < n; ++a)
                    s += Integer(q.phi[i][a]) * Integer(q.right_inverse[a][j]);
                EXPECT_EQ(s, i == j ? 1 : 0);
            }
        Polyhedron zero(n - k);
        for (std::size_t i = 0; i < n - k; ++i) {
            RatVector e(n - k, Rational(0));
            e[i] = 1;
            zero.add_equality(e, 0);
        }
        const Polyhedron kernel = preimage(zero, q.phi, n);
        EXPECT_EQ(dimension(kernel), static_cast<int>(k));
        RatVector combo(n, Rational(0));
        for (const auto &g : boundary) {
            const Rational c = make_rational(uniform(rng, -5, 5), uniform(rng, 1, 4));
            for (std::size_t a = 0; a < n; ++a)
                combo[a] += c * Rational(g[a]);
        }
        EXPECT_TRUE(kernel.contains(combo));
        EXPECT_TRUE(equal_sets(project(kernel, q.phi), zero));
    }
}

TEST(FastPath, Examples) {
    const auto f = parse_laurent("z*x1 + (z-1)*x2 + (z-2)", 2, Field::Qz);
    const auto at_z = halfline_disjoint_fast(f, Place::parse("q:z"), IntVector{2, -1});
    EXPECT_EQ(at_z.verdict, HalflineVerdict::Disjoint);
    EXPECT_EQ(at_z.vertex, std::optional<std::size_t>(1));
    const auto at_z1 = halfline_disjoint_fast(f, Place::parse("q:z-1"), IntVector{2, -1});
    ASSERT_EQ(at_z1.verdict, HalflineVerdict::Meets);
    const auto trop = trop_hypersurface(f, Place::parse("q:z-1"));
    EXPECT_TRUE(complex_membership(trop, at_z1.witness).has_value());
    EXPECT_GT(at_z1.witness[0], 0);
    EXPECT_EQ(at_z1.witness[0], -2 * at_z1.witness[1]);
    EXPECT_EQ(halfline_disjoint_fast(parse_laurent("x1 + x2 + 1", 2, Field::Q), Place::generic(), IntVector{0, 1})
                  .verdict,
              HalflineVerdict::NotRelint);
    EXPECT_EQ(code_of([] { halfline_disjoint_fast(parse_laurent("2*x1", 1, Field::Q), Place::generic(), {1}); }),
              ErrorCode::MonomialInput);
}

TEST(FastPath, AgreesWithLinearProgram) {
    Rng rng(72);
    int compared = 0, disjoint = 0;
    while (compared < 300) {
        const std::size_t n = uniform(rng, 1, 3);
        const Field field = uniform(rng, 0, 2) ? Field::Qz : Field::Q;
        const auto f = random_poly(rng, n, uniform(rng, 2, 5), field, -2, 2);
        const auto places = oracle_places(f);
        const Place p = places[uniform(rng, 0, places.size() - 1)];
        const IntVector v = random_direction(rng, n);
        const auto fast = halfline_disjoint_fast(f, p, v);
        if (linear_argmin(f, v).size() != 1) {
            EXPECT_EQ(fast.verdict, HalflineVerdict::NotRelint);
            continue;
        }
        const auto lp = halfspace_meets_complex(make_halfspace({}, v), trop_hypersurface(f, p));
        EXPECT_EQ(fast.verdict == HalflineVerdict::Disjoint, !lp.meets) << f.to_string() << " at " << p.to_string();
        if (fast.verdict == HalflineVerdict::Meets)
            EXPECT_TRUE(complex_membership(trop_hypersurface(f, p), fast.witness).has_value());
        disjoint += fast.verdict == HalflineVerdict::Disjoint;
        ++compared;
    }
    EXPECT_GT(disjoint, 30);
}

TEST(HalfspaceMeets, Examples) {
    const auto line = generic_skeleton(parse_laurent("x1 + x2 + 1", 2, Field::Q));
    const auto hit = halfspace_meets_complex(make_halfspace({}, IntVector{1, 0}), line);
    ASSERT_TRUE(hit.meets);
    EXPECT_EQ(hit.witness, rat({1, 0}));

    const auto pinched = trop_hypersurface(parse_laurent("x1*x2 - 2*x1 - 2*x2 + 1", 2, Field::Q), Place::prime(2));
    EXPECT_FALSE(halfspace_meets_complex(make_halfspace({}, IntVector{1, 1}), pinched).meets);

    const auto f = parse_laurent("z*x1 + (z-1)*x2 + (z-2)", 2, Field::Qz);
    const auto report = adelic_disjoint(adelic_amoeba(f), make_halfspace({}, IntVector{-1, -1}));
    EXPECT_TRUE(report.generic.result.meets);
    EXPECT_FALSE(report.disjoint);
    const auto &w = report.generic.result.witness;
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0], w[1]);
    EXPECT_LT(w[0], 0);

    EXPECT_EQ(code_of([&] { halfspace_meets_complex(make_halfspace({}, IntVector{1, 0, 0}), line); }),
              ErrorCode::DimensionMismatch);
}

// Witnesses from the LP lie in H and in the reported cell.
TEST(HalfspaceMeets, WitnessesLieInBoth) {
    Rng rng(73);
    int met = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = uniform(rng, 2, 3);
        const auto f = random_poly(rng, n, uniform(rng, 2, 5), Field::Q, -2, 2);
        const auto places = oracle_places(f);
        const auto complex = trop_hypersurface(f, places[uniform(rng, 0, places.size() - 1)]);
        IntMatrix boundary;
        if (n == 3 && uniform(rng, 0, 1))
            boundary.push_back(random_direction(rng, n));
        const IntVector v = random_direction(rng, n);
        IntMatrix all = boundary;
        all.push_back(v);
        if (rank(all) != all.size())
            continue;
        const auto h = make_halfspace(boundary, v);
        const auto r = halfspace_meets_complex(h, complex);
        if (!r.meets)
            continue;
        ++met;
        ASSERT_TRUE(r.cell.has_value());
        EXPECT_TRUE(complex.cells[*r.cell].polyhedron.contains(r.witness));
        // witness = sum l_a g_a + t v with t > 0: the component along v,
        // measured by phi, is a positive multiple of phi(v).
        const auto q = quotient_map(h);
        RatVector vr(v.begin(), v.end());
        const auto pw = mapped(q.phi, r.witness), pv = mapped(q.phi, vr);
        std::optional<Rational> t;
        for (std::size_t i = 0; i < pv.size(); ++i)
            if (pv[i] != 0)
                t = pw[i] / pv[i];
        ASSERT_TRUE(t.has_value());
        EXPECT_GT(*t, 0);
        for (std::size_t i = 0; i < pv.size(); ++i)
            EXPECT_EQ(pw[i], *t * pv[i]);
    }
    EXPECT_GT(met, 50);
}

TEST(AdelicDisjoint, WorkedSystems) {
    const auto plane_curve = adelic_amoeba(curve_in_three_space());
    const auto r2 = adelic_disjoint(plane_curve, make_halfspace(rows({{0, 0, 1}}), IntVector{1, 1, 0}));
    EXPECT_TRUE(r2.disjoint);
    EXPECT_TRUE(r2.nonarchimedean_disjoint);
    EXPECT_FALSE(r2.special.empty());
    EXPECT_EQ(r2.archimedean, ArchStatus::NotApplicable);

    const auto surface = adelic_amoeba(surface_in_four_space());
    const auto r3 = adelic_disjoint(surface, make_halfspace(rows({{0, 0, 0, 1}}), IntVector{1, 1, 1, 0}));
    EXPECT_TRUE(r3.nonarchimedean_disjoint);
    EXPECT_EQ(r3.archimedean, ArchStatus::CertifiedDisjoint);
    EXPECT_TRUE(r3.disjoint);
}

TEST(AdelicDisjoint, ArchimedeanCrossingOnPointAmoeba) {
    // The amoeba of 2 x1 - 1 is the single point log 2, never hit by a
    // rational grid; lopsidedness for different terms on either side of it
    // still certifies that the half line meets it.
    const auto r = adelic_disjoint(adelic_amoeba(parse_laurent("2*x1 - 1", 1, Field::Q)), make_halfspace({}, {1}));
    EXPECT_TRUE(r.nonarchimedean_disjoint);
    EXPECT_EQ(r.archimedean, ArchStatus::Meets);
    EXPECT_TRUE(r.component_crossing.has_value());
    EXPECT_FALSE(r.disjoint);
}

TEST(DefinedOverK, Examples) {
    EXPECT_EQ(defined_over_k_test(parse_laurent("z*x1 + 2*z*x2 + 3*z", 2, Field::Qz)), std::optional<std::size_t>(0));
    EXPECT_FALSE(defined_over_k_test(parse_laurent("z*x1 + (z-1)*x2 + (z-2)", 2, Field::Qz)).has_value());
    EXPECT_EQ(defined_over_k_test(parse_laurent("(z^2+1)*(x1 + x2 - 5)", 2, Field::Qz)),
              std::optional<std::size_t>(0));
    EXPECT_EQ(code_of([] { defined_over_k_test(parse_laurent("x1 + 1", 1, Field::Q)); }), ErrorCode::FieldMismatch);
}

// Constant ratios give a disjoint half line in the cone of some vertex.
TEST(DefinedOverK, ForwardDirection) {
    Rng rng(74);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = constant_ratio_poly(rng, uniform(rng, 1, 3), uniform(rng, 2, 5));
        ASSERT_TRUE(defined_over_k_test(f).has_value()) << f.to_string();
        const auto amoeba = adelic_amoeba(f);
        const auto cones = vertex_cone_search(amoeba, f);
        const auto it = std::find_if(cones.begin(), cones.end(), [](const VertexCone &c) { return c.disjoint(); });
        ASSERT_NE(it, cones.end()) << f.to_string();
        EXPECT_TRUE(adelic_disjoint(amoeba, make_halfspace({}, it->direction)).disjoint) << f.to_string();
    }
}

// Without constant ratios no term has minimal valuation at every place; the
// places come from the test-side valuation oracle.
TEST(DefinedOverK, ConverseDirection) {
    Rng rng(75);
    int checked = 0;
    while (checked < 100) {
        const auto f = random_poly(rng, uniform(rng, 1, 3), uniform(rng, 2, 5), Field::Qz, -2, 2);
        if (defined_over_k_test(f))
            continue;
        ++checked;
        for (std::size_t i = 0; i < f.size(); ++i) {
            bool beaten = false;
            for (const auto &p : function_places())
                for (std::size_t j = 0; j < f.size(); ++j)
                    beaten |= oracle_valuation(f.term(j).coefficient, p) < oracle_valuation(f.term(i).coefficient, p);
            EXPECT_TRUE(beaten) << f.to_string() << " term " << i;
        }
        for (const auto &cone : vertex_cone_search(adelic_amoeba(f), f)) {
            EXPECT_FALSE(cone.uniform_minimal) << f.to_string();
            EXPECT_FALSE(cone.disjoint()) << f.to_string();
        }
    }
}

TEST(Torsion, PointExamples) {
    EXPECT_TRUE(torsion_point_test({Rational(1), Rational(-1), Rational(1)}));
    EXPECT_FALSE(torsion_point_test({Rational(2), Rational(1)}));
    EXPECT_TRUE(torsion_point_test({Rational(-1, 1), Rational(3, 3)}));
    EXPECT_FALSE(torsion_point_test({Rational(1, 2)}));
    EXPECT_EQ(code_of([] { torsion_point_test({Rational(1), Rational(0)}); }), ErrorCode::ZeroCoordinate);
}

TEST(Torsion, CosetExamples) {
    const auto t = torsion_coset_test(parse_laurent("x1*x2^2 - 1", 2, Field::Q));
    ASSERT_TRUE(t.torsion_coset);
    ASSERT_TRUE(t.hyperplane.has_value());
    // Either sign of u - w is the same hyperplane.
    EXPECT_TRUE(t.hyperplane->row == rat({1, 2}) || t.hyperplane->row == rat({-1, -2}));
    EXPECT_EQ(t.hyperplane->rhs, 0);
    EXPECT_FALSE(torsion_coset_test(parse_laurent("x1 - 2", 1, Field::Q)).torsion_coset);
    EXPECT_TRUE(torsion_coset_test(parse_laurent("x1 + x2", 2, Field::Q)).torsion_coset);
    EXPECT_FALSE(torsion_coset_test(parse_laurent("x1 + x2 + 1", 2, Field::Q)).torsion_coset);
    EXPECT_EQ(code_of([] { torsion_coset_test(parse_laurent("z*x1 + 1", 1, Field::Qz)); }), ErrorCode::FieldMismatch);
    EXPECT_EQ(code_of([] { torsion_coset_test(parse_laurent("3*x1", 1, Field::Q)); }), ErrorCode::MonomialInput);
}

// Products of cyclotomic polynomials in one primitive monomial; the amoeba
// at every place is then the hyperplane <w, v> = 0.
TEST(Torsion, CyclotomicCosets) {
    const std::vector<std::pair<std::string, std::size_t>> yes = {
        {"x1^2 + x1 + 1", 1}, {"x1^4 + 1", 1}, {"x1^3 - x1^2 - x1 + 1", 1},
        {"x1^2*x2^2 + x1*x2 + 1", 2}, {"x1^-1*x2 - x1^3*x2^-1", 2}, {"x1^6 - x1^3*x2^2 + x2^4", 2}};
    for (const auto &[text, n] : yes) {
        const auto f = parse_laurent(text, n, Field::Q);
        const auto w = cyclotomic_coset_test(f);
        ASSERT_TRUE(w.has_value()) << text;
        Polyhedron plane(n);
        plane.add_equality(RatVector(w->begin(), w->end()), 0);
        for (const auto &p : {Place::generic(), Place::prime(2), Place::prime(3)})
            EXPECT_TRUE(complex_equal(trop_hypersurface(f, p), complex_of(n, {plane}))) << text;
    }
    for (const auto &text : {"x1^2 + x1 + 2", "x1^2 - 2", "x1 + x2 + 1", "2*x1 - 1", "x1^2 + 3*x1 + 1"})
        EXPECT_FALSE(cyclotomic_coset_test(parse_laurent(text, infer_rank(text), Field::Q)).has_value()) << text;
    EXPECT_EQ(code_of([] { cyclotomic_coset_test(parse_laurent("z*x1 + 1", 1, Field::Qz)); }),
              ErrorCode::FieldMismatch);
}

TEST(Theorem1, WorkedExamples) {
    Presentation curve{curve_in_three_space(), parse_laurent("x1 - x2 - 1", 2, Field::Q), false};
    const auto r2 = theorem1_report(curve, make_halfspace(rows({{0, 0, 1}}), IntVector{1, 1, 0}));
    EXPECT_EQ(r2.status, Theorem1Status::Disjoint);
    EXPECT_EQ(r2.conclusion_case, std::optional<int>(2));
    EXPECT_FALSE(r2.archimedean_caveat);

    Presentation surface{surface_in_four_space(), std::nullopt, true};
    const auto r3 = theorem1_report(surface, make_halfspace(rows({{0, 0, 0, 1}}), IntVector{1, 1, 1, 0}));
    EXPECT_EQ(r3.status, Theorem1Status::Disjoint);
    EXPECT_EQ(r3.conclusion_case, std::optional<int>(1));

    Presentation binomial{{identity_pullback(parse_laurent("x1*x2 - 1", 2, Field::Q))}, std::nullopt, false};
    const auto r4 = theorem1_report(binomial, make_halfspace({}, IntVector{1, 1}));
    EXPECT_EQ(r4.status, Theorem1Status::Disjoint);
    EXPECT_EQ(r4.conclusion_case, std::optional<int>(3));

    Presentation point{{identity_pullback(parse_laurent("2*x1 - 1", 1, Field::Q))}, std::nullopt, false};
    EXPECT_EQ(theorem1_report(point, make_halfspace({}, {1})).status, Theorem1Status::Meets);

    Presentation missing{curve_in_three_space(), std::nullopt, false};
    EXPECT_EQ(code_of([&] { theorem1_report(missing, make_halfspace(rows({{0, 0, 1}}), IntVector{1, 1, 0})); }),
              ErrorCode::MissingImagePresentation);
}

TEST(Theorem1, NoViolationOnCorpus) {
    Rng rng(76);
    for (const auto &inst : hypersurfaces()) {
        const auto f = inst.poly();
        for (int k = 0; k < 3; ++k) {
            Presentation x{{identity_pullback(f)}, std::nullopt, false};
            const auto r = theorem1_report(x, make_halfspace({}, random_direction(rng, f.rank())), quick_scan());
            EXPECT_NE(r.status, Theorem1Status::Violation) << inst.name;
        }
    }
}

// Case (a): a hypersurface with empty boundary. Case (b): the pullback of a
// hypersurface f' along the quotient map of H, with f' as the image.
TEST(Theorem1, NoViolationOnRandomInstances) {
    Rng rng(77);
    int disjoint = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const bool case_b = trial % 2;
        const Field field = trial % 4 < 2 ? Field::Qz : Field::Q;
        const std::size_t m = uniform(rng, 1, 2);
        LaurentPoly image = [&] {
            if (uniform(rng, 0, 1) == 0)
                return random_poly(rng, m, uniform(rng, 2, 4), field, -2, 2);
            if (field == Field::Qz)
                return constant_ratio_poly(rng, m, uniform(rng, 2, 4));
            Exponent u = random_exponent(rng, m, -2, 2), w = random_exponent(rng, m, -2, 2);
            while (u == w)
                w = random_exponent(rng, m, -2, 2);
            const Rational a = random_rational(rng);
            return LaurentPoly(m, Field::Q, {{u, Scalar(a)}, {w, Scalar(uniform(rng, 0, 1) ? a : Rational(-a))}});
        }();
        Presentation x;
        Halfspace h;
        if (!case_b) {
            h = make_halfspace({}, random_direction(rng, m));
            x.system = {identity_pullback(image)};
        } else {
            const std::size_t n = m + 1;
            IntMatrix boundary = {random_direction(rng, n)};
            IntVector v = random_direction(rng, n);
            IntMatrix all = boundary;
            all.push_back(v);
            if (rank(all) != 2) {
                --trial;
                continue;
            }
            h = make_halfspace(boundary, v);
            x.system = {PullbackConstraint{image, quotient_map(h).phi}};
            x.image = image;
        }
        const auto r = theorem1_report(x, h, quick_scan());
        EXPECT_NE(r.status, Theorem1Status::Violation) << image.to_string();
        if (r.status == Theorem1Status::Disjoint) {
            ++disjoint;
            EXPECT_EQ(r.conclusion_case, std::optional<int>(field == Field::Qz ? 2 : 3));
        }
    }
    EXPECT_GT(disjoint, 20);
}

TEST(Ekl, Examples) {
    const auto line = ekl_consistency_check(parse_laurent("z*x1 + (z-1)*x2 + (z-2)", 2, Field::Qz));
    EXPECT_FALSE(line.disjoint_vertex.has_value());
    EXPECT_TRUE(line.all_contain_zero);
    EXPECT_TRUE(line.consistent);
    EXPECT_EQ(line.zero_by_place.size(), 4u);

    const auto pinched = ekl_consistency_check(parse_laurent("x1*x2 - 2*x1 - 2*x2 + 1", 2, Field::Q));
    EXPECT_FALSE(pinched.disjoint_vertex.has_value());
    EXPECT_TRUE(pinched.all_contain_zero);
    EXPECT_TRUE(pinched.consistent);

    const auto constant = ekl_consistency_check(parse_laurent("z*x1 + 2*z*x2 + 3*z", 2, Field::Qz));
    EXPECT_TRUE(constant.disjoint_vertex.has_value());
    EXPECT_TRUE(constant.consistent);
}
