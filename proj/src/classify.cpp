#include "amoeba/classify.hpp"

#include <algorithm>
#include <cmath>

#include "parallel.hpp"

namespace amoeba {

namespace {

Rational pairing(const Exponent &u, const IntVector &v) {
    Integer s = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        s += Integer(static_cast<long>(u[k])) * v[k];
    return Rational(s);
}

LaurentPoly promoted(const LaurentPoly &f, Field field) {
    if (f.field() == field)
        return f;
    return LaurentPoly(f.rank(), field, f.terms());
}

bool minimal_at(const TropicalData &data, std::size_t i) {
    return std::all_of(data.heights.begin(), data.heights.end(),
                       [&](const Rational &c) { return data.heights[i] <= c; });
}

} // namespace

Halfspace make_halfspace(IntMatrix boundary, IntVector direction) {
    const std::size_t n = direction.size();
    if (n == 0)
        throw Error(ErrorCode::DimensionMismatch, "halfspace direction is empty");
    Halfspace h;
    h.direction = std::move(direction);
    for (auto &g : boundary) {
        if (g.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "boundary generator length does not match direction");
        IntMatrix trial = h.boundary;
        trial.push_back(g);
        if (rank(trial) == trial.size())
            h.boundary = std::move(trial);
    }
    IntMatrix with_direction = h.boundary;
    with_direction.push_back(h.direction);
    if (rank(with_direction) == rank(h.boundary))
        throw Error(ErrorCode::DependentDirection, "direction lies in the span of the boundary");
    return h;
}

QuotientMap quotient_map(const Halfspace &h) {
    const std::size_t n = h.rank();
    QuotientMap q;
    q.phi = h.boundary.empty() ? identity_matrix(n) : integer_kernel(h.boundary, n);
    auto inverse = integer_right_inverse(q.phi, n);
    if (!inverse)
        throw Error(ErrorCode::InvariantFailure, "quotient map has no integer right inverse");
    q.right_inverse = std::move(*inverse);
    return q;
}

std::string_view halfline_verdict_name(HalflineVerdict verdict) {
    switch (verdict) {
    case HalflineVerdict::Disjoint:
        return "disjoint";
    case HalflineVerdict::Meets:
        return "meets";
    case HalflineVerdict::NotRelint:
        return "not_relint";
    }
    return "not_relint";
}

HalflineResult halfline_disjoint_fast(const LaurentPoly &f, const Place &p, const IntVector &v) {
    require_hypersurface(f);
    if (v.size() != f.rank())
        throw Error(ErrorCode::DimensionMismatch, "direction length does not match rank");
    TropicalData data = tropical_data(f, p);
    std::vector<Rational> slopes;
    for (const auto &u : data.exponents)
        slopes.push_back(pairing(u, v));
    auto lowest = std::min_element(slopes.begin(), slopes.end());
    HalflineResult out;
    if (std::count(slopes.begin(), slopes.end(), *lowest) != 1)
        return out;
    const std::size_t i = static_cast<std::size_t>(lowest - slopes.begin());
    out.vertex = i;
    if (minimal_at(data, i)) {
        out.verdict = HalflineVerdict::Disjoint;
        return out;
    }
    // Largest c > 0 where term i ties with a term of smaller height.
    Rational best = 0;
    for (std::size_t j = 0; j < slopes.size(); ++j) {
        if (data.heights[j] >= data.heights[i])
            continue;
        Rational root = (data.heights[i] - data.heights[j]) / (slopes[j] - slopes[i]);
        best = std::max(best, root);
    }
    out.verdict = HalflineVerdict::Meets;
    for (const auto &x : v)
        out.witness.push_back(best * Rational(x));
    return out;
}

MeetResult halfspace_meets_polyhedron(const Halfspace &h, const Polyhedron &p) {
    const std::size_t n = h.rank();
    if (p.rank() != n)
        throw Error(ErrorCode::DimensionMismatch, "halfspace and polyhedron ranks differ");
    const std::size_t g = h.boundary.size();
    // x = sum lambda_a g_a + t v, variables (lambda, t).
    IntMatrix m(n, IntVector(g + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t a = 0; a < g; ++a)
            m[r][a] = h.boundary[a][r];
        m[r][g] = h.direction[r];
    }
    Polyhedron lifted = preimage(p, m, g + 1);
    RatVector t_row(g + 1, Rational(0));
    t_row[g] = 1;
    LpResult r = lp_solve(t_row, lifted, LpSense::Maximize);
    MeetResult out;
    if (r.status == LpStatus::Infeasible || (r.status == LpStatus::Optimal && r.value <= 0))
        return out;
    RatVector point = r.point;
    if (r.status == LpStatus::Unbounded && point[g] <= 0) {
        // Walk along the improving ray until t = 1.
        const Rational step = (1 - point[g]) / r.ray[g];
        for (std::size_t k = 0; k <= g; ++k)
            point[k] += step * r.ray[k];
    }
    out.meets = true;
    out.witness = amoeba::apply(m, point);
    return out;
}

MeetResult halfspace_meets_complex(const Halfspace &h, const PolyhedralComplex &c, Execution exec) {
    if (c.rank != h.rank())
        throw Error(ErrorCode::DimensionMismatch, "halfspace and complex ranks differ");
    std::vector<MeetResult> results(c.cells.size());
    detail::for_each_index(c.cells.size(), exec, [&](std::size_t i) {
        results[i] = halfspace_meets_polyhedron(h, c.cells[i].polyhedron);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].meets) {
            results[i].cell = i;
            return results[i];
        }
    }
    return {};
}

std::string_view arch_status_name(ArchStatus status) {
    switch (status) {
    case ArchStatus::CertifiedDisjoint:
        return "certified_disjoint";
    case ArchStatus::Meets:
        return "meets";
    case ArchStatus::EvidenceOnly:
        return "evidence_only";
    case ArchStatus::NotApplicable:
        return "not_applicable";
    }
    return "not_applicable";
}

namespace {

RatVector halfspace_point(const Halfspace &h, const std::vector<Rational> &lambda, const Rational &t) {
    RatVector x(h.rank(), Rational(0));
    for (std::size_t k = 0; k < h.rank(); ++k) {
        x[k] = t * Rational(h.direction[k]);
        for (std::size_t a = 0; a < h.boundary.size(); ++a)
            x[k] += lambda[a] * Rational(h.boundary[a][k]);
    }
    return x;
}

// One constraint f(x^phi) with phi of full row rank: the torus map is onto, so
// the amoeba is the preimage of the amoeba of f and the hypersurface
// certificates (triangle Inside, sampling, component crossing) apply to it.
bool single_pullback(const AdelicAmoeba &amoeba) {
    if (amoeba.constraints.size() != 1)
        return false;
    const IntMatrix &map = amoeba.constraints.front().map;
    return rank(map) == map.size();
}

std::vector<ArchPoint> scan_points(const AdelicAmoeba &amoeba, const Halfspace &h,
                                   const ArchScanOptions &options) {
    if (options.points < 1 || options.t_max <= 0)
        throw Error(ErrorCode::InvalidArgument, "archimedean scan needs points >= 1 and t_max > 0");
    std::vector<ArchPoint> out;
    const std::size_t g = h.boundary.size();
    for (int q = 1; q <= options.points; ++q) {
        Rational t = options.t_max * make_rational(q, options.points);
        std::vector<Rational> lambda(g);
        for (std::size_t a = 0; a < g; ++a)
            lambda[a] = make_rational(static_cast<long>((q * (2 * a + 3)) % 7) - 3, 3);
        ArchPoint p;
        p.point = halfspace_point(h, lambda, t);
        out.push_back(std::move(p));
    }
    if (!single_pullback(amoeba))
        return out;
    // Probes near the boundary of H and far out along the direction.
    const std::vector<Rational> zero(g, Rational(0));
    std::vector<Rational> ts;
    Rational step = options.t_max / options.points;
    for (int j = 1; j <= 6; ++j) {
        step /= 2;
        ts.push_back(step);
    }
    Rational far = options.t_max;
    for (int j = 1; j <= 6; ++j) {
        far *= 2;
        ts.push_back(far);
    }
    const auto &[f, map] = amoeba.constraints.front();
    const RatVector dir = amoeba::apply(map, RatVector(h.direction.begin(), h.direction.end()));
    std::vector<Rational> slopes;
    for (const auto &t : f.terms()) {
        Rational s = 0;
        for (std::size_t k = 0; k < dir.size(); ++k)
            s += Rational(static_cast<long>(t.exponent[k])) * dir[k];
        slopes.push_back(s);
    }
    auto lowest = std::min_element(slopes.begin(), slopes.end());
    if (std::count(slopes.begin(), slopes.end(), *lowest) == 1) {
        double bound = escape_bound(f, static_cast<std::size_t>(lowest - slopes.begin()), dir);
        if (std::isfinite(bound) && bound >= options.t_max.get_d() && bound < 1e12)
            ts.emplace_back(static_cast<long>(std::floor(bound)) + 1);
    }
    for (const auto &t : ts) {
        ArchPoint p;
        p.point = halfspace_point(h, zero, t);
        p.grid = false;
        out.push_back(std::move(p));
    }
    return out;
}

void evaluate_point(const AdelicAmoeba &amoeba, ArchPoint &point, const SampleOptions &sampling) {
    const bool single = single_pullback(amoeba);
    for (std::size_t k = 0; k < amoeba.constraints.size(); ++k) {
        const auto &c = amoeba.constraints[k];
        RatVector w = amoeba::apply(c.map, point.point);
        if (c.f.size() == 3) {
            ArchResult tri = triangle_exact_membership(c.f, w);
            if (tri.verdict == ArchVerdict::Outside || (single && tri.verdict == ArchVerdict::Inside)) {
                point.verdict = tri.verdict;
                point.method = "triangle";
                point.constraint = k;
                point.dominant = tri.dominant;
                return;
            }
        }
        if (auto dominant = lopsided_term(c.f, w)) {
            point.verdict = ArchVerdict::Outside;
            point.method = "lopsided";
            point.constraint = k;
            point.dominant = dominant;
            return;
        }
    }
    point.verdict = ArchVerdict::Unknown;
    point.method = "undecided";
    if (!single)
        return;
    try {
        const auto &c = amoeba.constraints.front();
        ArchResult sampled = sampled_inside(c.f, amoeba::apply(c.map, point.point), sampling);
        point.method = "sampled";
        if (sampled.verdict == ArchVerdict::Inside) {
            point.verdict = ArchVerdict::Inside;
            point.constraint = 0;
            point.witness = sampled.witness;
        }
    } catch (const Error &e) {
        if (e.code() != ErrorCode::DegenerateSlice)
            throw;
    }
}

} // namespace

AdelicReport adelic_disjoint(const AdelicAmoeba &amoeba, const Halfspace &h,
                             const ArchScanOptions &options, Execution exec) {
    if (amoeba.rank != h.rank())
        throw Error(ErrorCode::DimensionMismatch, "halfspace and amoeba ranks differ");
    AdelicReport report;
    report.generic.place = Place::generic();
    report.generic.result = halfspace_meets_complex(h, amoeba.generic, exec);
    report.nonarchimedean_disjoint = !report.generic.result.meets;
    for (const auto &[place, complex] : amoeba.special) {
        PlaceReport pr{place, halfspace_meets_complex(h, complex, exec)};
        report.nonarchimedean_disjoint &= !pr.result.meets;
        report.special.push_back(std::move(pr));
    }

    if (amoeba.field == Field::Q) {
        report.arch_points = scan_points(amoeba, h, options);
        detail::for_each_index(report.arch_points.size(), exec, [&](std::size_t i) {
            SampleOptions sampling = options.sampling;
            sampling.seed += i;
            evaluate_point(amoeba, report.arch_points[i], sampling);
        });
        if (single_pullback(amoeba)) {
            const auto &pts = report.arch_points;
            for (std::size_t a = 0; a < pts.size() && !report.component_crossing; ++a)
                for (std::size_t b = a + 1; b < pts.size(); ++b)
                    if (pts[a].dominant && pts[b].dominant && *pts[a].dominant != *pts[b].dominant) {
                        report.component_crossing = std::make_pair(a, b);
                        break;
                    }
        }
        bool any_inside = std::any_of(report.arch_points.begin(), report.arch_points.end(),
                                      [](const ArchPoint &p) { return p.verdict == ArchVerdict::Inside; });
        bool all_outside = std::all_of(report.arch_points.begin(), report.arch_points.end(),
                                       [](const ArchPoint &p) { return p.verdict == ArchVerdict::Outside; });
        if (any_inside || report.component_crossing)
            report.archimedean = ArchStatus::Meets;
        else if (all_outside)
            report.archimedean = ArchStatus::CertifiedDisjoint;
        else
            report.archimedean = ArchStatus::EvidenceOnly;
    }
    report.disjoint = report.nonarchimedean_disjoint && report.archimedean != ArchStatus::Meets;
    return report;
}

namespace {

// Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d, cached in index order.
const Poly &cyclotomic(std::size_t m, std::vector<Poly> &cache) {
    while (cache.size() <= m) {
        const std::size_t k = cache.size();
        if (k == 0) {
            cache.push_back(Poly::constant(1));
            continue;
        }
        Poly p = Poly::monomial(1, k) - Poly::constant(1);
        for (std::size_t d = 1; d < k; ++d)
            if (k % d == 0)
                p = divmod(p, cache[d]).first;
        cache.push_back(p);
    }
    return cache[m];
}

} // namespace

std::optional<IntVector> cyclotomic_coset_test(const LaurentPoly &f) {
    if (f.field() != Field::Q)
        throw Error(ErrorCode::FieldMismatch, "cyclotomic coset test needs rational coefficients");
    require_hypersurface(f);
    const std::size_t n = f.rank();
    // All exponents on one line u_0 + Z w.
    std::vector<IntVector> diffs;
    for (const auto &t : f.terms()) {
        IntVector d(n);
        for (std::size_t k = 0; k < n; ++k)
            d[k] = Integer(static_cast<long>(t.exponent[k] - f.term(0).exponent[k]));
        diffs.push_back(std::move(d));
    }
    IntVector w = diffs[1];
    Integer g = 0;
    for (const auto &x : w)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto &x : w)
        x /= g;
    std::vector<long> steps;
    const std::size_t pivot = std::find_if(w.begin(), w.end(), [](const Integer &x) { return x != 0; }) - w.begin();
    for (const auto &d : diffs) {
        if (d[pivot] % w[pivot] != 0)
            return std::nullopt;
        const Integer k = d[pivot] / w[pivot];
        for (std::size_t a = 0; a < n; ++a)
            if (d[a] != k * w[a])
                return std::nullopt;
        steps.push_back(k.get_si());
    }
    const long low = *std::min_element(steps.begin(), steps.end());
    std::vector<Rational> coeffs(*std::max_element(steps.begin(), steps.end()) - low + 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        coeffs[steps[i] - low] = f.term(i).coefficient.rational();
    Poly rest = Poly(coeffs).monic();
    // phi(m) >= sqrt(m / 2), so only m <= 2 deg^2 can divide.
    const std::size_t bound = 2 * static_cast<std::size_t>(rest.degree() * rest.degree()) + 2;
    std::vector<Poly> cache;
    for (std::size_t m = 1; m <= bound && !rest.is_constant(); ++m) {
        const Poly &phi = cyclotomic(m, cache);
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = divmod(rest, phi);
            if (!r.is_zero())
                break;
            rest = q;
        }
    }
    if (!rest.is_constant())
        return std::nullopt;
    return w;
}

std::optional<std::size_t> defined_over_k_test(const LaurentPoly &f) {
    if (f.field() != Field::Qz)
        throw Error(ErrorCode::FieldMismatch, "defined-over-k test needs coefficients in Q(z)");
    require_hypersurface(f);
    // Constant ratios to one coefficient give constant ratios to all of them.
    const Scalar &first = f.term(0).coefficient;
    for (const auto &t : f.terms())
        if (!(t.coefficient / first).function().is_constant())
            return std::nullopt;
    return 0;
}

bool torsion_point_test(const std::vector<Rational> &x) {
    bool torsion = true;
    for (Rational c : x) {
        c.canonicalize();
        if (c == 0)
            throw Error(ErrorCode::ZeroCoordinate, "torsion test on a point with a zero coordinate");
        torsion &= abs(c) == 1;
    }
    return torsion;
}

TorsionCosetResult torsion_coset_test(const LaurentPoly &f) {
    if (f.field() != Field::Q)
        throw Error(ErrorCode::FieldMismatch, "torsion coset test needs coefficients in Q");
    require_hypersurface(f);
    TorsionCosetResult out;
    if (f.size() != 2)
        return out;
    Rational ratio = -f.term(1).coefficient.rational() / f.term(0).coefficient.rational();
    if (!torsion_point_test({ratio}))
        return out;
    out.torsion_coset = true;
    RatVector row(f.rank());
    for (std::size_t k = 0; k < f.rank(); ++k)
        row[k] = Rational(static_cast<long>(f.term(0).exponent[k] - f.term(1).exponent[k]));
    Polyhedron normalized(f.rank(), {{row, Rational(0)}}, {});
    out.hyperplane = normalized.equalities().front();
    return out;
}

std::string_view theorem1_status_name(Theorem1Status status) {
    switch (status) {
    case Theorem1Status::Meets:
        return "meets";
    case Theorem1Status::Disjoint:
        return "disjoint";
    case Theorem1Status::Violation:
        return "violation";
    }
    return "violation";
}

Theorem1Report theorem1_report(const Presentation &x, const Halfspace &h, const ArchScanOptions &options,
                               Execution exec) {
    if (x.system.empty())
        throw Error(ErrorCode::InvalidArgument, "empty presentation");
    Theorem1Report report;
    report.quotient = quotient_map(h);
    auto [field, n] = system_shape(x.system);
    if (n != h.rank())
        throw Error(ErrorCode::DimensionMismatch, "halfspace and variety ranks differ");

    std::optional<LaurentPoly> image;
    if (!x.codim_gt_one) {
        if (x.image) {
            if (x.image->rank() != report.quotient.phi.size())
                throw Error(ErrorCode::DimensionMismatch,
                            "image hypersurface must live in the " +
                                std::to_string(report.quotient.phi.size()) + "-dimensional quotient");
            image = *x.image;
        } else if (h.boundary.empty() && x.system.size() == 1 &&
                   x.system.front().map == identity_matrix(n)) {
            image = x.system.front().f;
        } else {
            throw Error(ErrorCode::MissingImagePresentation,
                        "supply the image hypersurface in quotient coordinates or declare codimension > 1");
        }
    }

    AdelicAmoeba amoeba = adelic_amoeba(x.system, exec);
    report.hypothesis = adelic_disjoint(amoeba, h, options, exec);
    report.archimedean_caveat =
        field == Field::Q && report.hypothesis.archimedean != ArchStatus::CertifiedDisjoint;
    if (!report.hypothesis.disjoint) {
        report.status = Theorem1Status::Meets;
        return report;
    }
    report.status = Theorem1Status::Violation;
    if (x.codim_gt_one) {
        report.conclusion_case = 1;
        report.certificates.push_back("image declared to have codimension greater than one");
    } else if (field == Field::Qz) {
        if (auto i = defined_over_k_test(promoted(*image, Field::Qz))) {
            report.conclusion_case = 2;
            report.certificates.push_back("image has constant coefficient ratios relative to term " +
                                          std::to_string(*i) + ": " + image->to_string());
        }
    } else if (image->field() == Field::Q) {
        auto coset = torsion_coset_test(*image);
        if (coset.torsion_coset) {
            report.conclusion_case = 3;
            report.certificates.push_back("image is a binomial with coefficient ratio +-1: " +
                                          image->to_string());
        } else if (cyclotomic_coset_test(*image)) {
            report.conclusion_case = 3;
            report.certificates.push_back("image is a monomial times a product of cyclotomic polynomials "
                                          "in one primitive monomial: " +
                                          image->to_string());
        }
    }
    if (report.conclusion_case)
        report.status = Theorem1Status::Disjoint;
    return report;
}

std::vector<VertexCone> vertex_cone_search(const AdelicAmoeba &amoeba, const LaurentPoly &f, Execution exec) {
    require_hypersurface(f);
    const std::size_t n = f.rank();
    NewtonPolytope polytope = newton_polytope(f);
    std::vector<TropicalData> data;
    for (const auto &[place, complex] : amoeba.special)
        data.push_back(tropical_data(f, place));

    std::vector<VertexCone> out(polytope.vertex_indices.size());
    detail::for_each_index(out.size(), exec, [&](std::size_t idx) {
        const std::size_t i = polytope.vertex_indices[idx];
        VertexCone &cone = out[idx];
        cone.vertex = i;
        cone.uniform_minimal =
            std::all_of(data.begin(), data.end(), [&](const TropicalData &d) { return minimal_at(d, i); });
        // max s with <u_i - u_j, v> + s <= 0 for all j != i, s <= 1.
        std::vector<Constraint> ineqs;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (j == i)
                continue;
            RatVector row(n + 1);
            for (std::size_t k = 0; k < n; ++k)
                row[k] = Rational(static_cast<long>(f.term(i).exponent[k] - f.term(j).exponent[k]));
            row[n] = 1;
            ineqs.push_back({std::move(row), Rational(0)});
        }
        RatVector cap(n + 1, Rational(0));
        cap[n] = 1;
        ineqs.push_back({cap, Rational(1)});
        LpResult r = lp_solve(cap, Polyhedron(n + 1, {}, std::move(ineqs)), LpSense::Maximize);
        if (r.status != LpStatus::Optimal || r.value <= 0)
            throw Error(ErrorCode::InvariantFailure, "vertex cone has empty interior");
        cone.direction = primitive_integer(std::span<const Rational>(r.point.data(), n));
        Halfspace line = make_halfspace({}, cone.direction);
        if (halfspace_meets_complex(line, amoeba.generic, Execution::Serial).meets) {
            cone.meets_at = Place::generic();
            return;
        }
        for (const auto &[place, complex] : amoeba.special) {
            if (halfspace_meets_complex(line, complex, Execution::Serial).meets) {
                cone.meets_at = place;
                return;
            }
        }
        if (amoeba.field == Field::Q)
            cone.archimedean = adelic_disjoint(amoeba, line, {}, Execution::Serial).archimedean;
    });
    return out;
}

EklReport ekl_consistency_check(const LaurentPoly &f, Execution exec) {
    require_hypersurface(f);
    AdelicAmoeba amoeba = adelic_amoeba(f, exec);
    EklReport report;
    report.cones = vertex_cone_search(amoeba, f, exec);
    for (const auto &cone : report.cones) {
        if (cone.disjoint()) {
            report.disjoint_vertex = cone.vertex;
            break;
        }
    }
    report.zero_by_place.emplace_back(Place::generic(), contains_zero(amoeba.generic));
    for (const auto &[place, complex] : amoeba.special)
        report.zero_by_place.emplace_back(place, contains_zero(complex));
    report.all_contain_zero = std::all_of(report.zero_by_place.begin(), report.zero_by_place.end(),
                                          [](const auto &pz) { return pz.second; });
    // The valuation criterion and the LP search must agree cone by cone at the
    // nonarchimedean places.
    bool agree = std::all_of(report.cones.begin(), report.cones.end(), [](const VertexCone &c) {
        return c.uniform_minimal == !c.meets_at.has_value();
    });
    report.consistent = agree && (report.disjoint_vertex.has_value() || report.all_contain_zero);
    return report;
}

} // namespace amoeba
