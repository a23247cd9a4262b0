#pragma once

// Shared test corpus, random generators and test-side oracles. The oracles
// recompute valuations and minima from first principles so they do not share
// code paths with the library under test.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "amoeba/classify.hpp"

namespace corpus {

using namespace amoeba;

struct Instance {
    std::string name;
    std::string text;
    std::size_t rank;
    Field field;

    LaurentPoly poly() const { return parse_laurent(text, rank, field); }
};

inline const std::vector<Instance> &hypersurfaces() {
    static const std::vector<Instance> list = {
        {"line_over_function_field", "z*x1 + (z-1)*x2 + (z-2)", 2, Field::Qz},
        {"pinched_conic", "x1*x2 - 2*x1 - 2*x2 + 1", 2, Field::Q},
        {"tropical_line", "x1 + x2 + 1", 2, Field::Q},
        {"binomial", "x1*x2^2 - 1", 2, Field::Q},
        {"quadrilateral", "1 + x1 + x2 + x1*x2^2", 2, Field::Q},
        {"conic_at_two", "4*x1^2 + 2*x1*x2 + x2^2 + 2*x1 + 8*x2 + 1", 2, Field::Q},
        {"laurent_diamond", "x1*x2^-1 + 6 + x2 + 2*x1^-1", 2, Field::Q},
        {"plane", "x1 + x2 + x3 + 1", 3, Field::Q},
        {"plane_over_function_field", "z*x1 + x2 + (z+1)*x3 + z^2", 3, Field::Qz},
        {"cubic_at_three", "9*x1*x2*x3 + 3*x1 + x2 + 27*x3 + 1", 3, Field::Q},
        {"cyclotomic", "x1^2 + x1 + 1", 1, Field::Q},
        {"univariate_function_field", "(z^2-1)*x1^3 + z*x1 + 1", 1, Field::Qz},
    };
    return list;
}

// Places where the test-side valuation oracle applies: primes, linear
// irreducibles, infinity and Generic. Bad places plus one good place.
inline std::vector<Place> oracle_places(const LaurentPoly &f) {
    std::vector<Place> out = {Place::generic()};
    for (const auto &p : bad_places(f))
        out.push_back(p);
    if (f.field() == Field::Q) {
        out.push_back(Place::prime(7));
    } else {
        out.push_back(Place::parse("q:z-5"));
        out.push_back(Place::infinity());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline IntMatrix rows(std::initializer_list<std::initializer_list<long>> r) {
    IntMatrix out;
    for (const auto &row : r) {
        IntVector v;
        for (long x : row)
            v.emplace_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

// X = image of t -> (t, t-1, t-1/z) in the 3-torus over Q(z).
inline std::vector<PullbackConstraint> curve_in_three_space() {
    return {{parse_laurent("x1 - x2 - 1", 2, Field::Q), rows({{1, 0, 0}, {0, 1, 0}})},
            {parse_laurent("x1 - x2 - 1/z", 2, Field::Qz), rows({{1, 0, 0}, {0, 0, 1}})},
            {parse_laurent("x1 - x2 - (1-z)/z", 2, Field::Qz), rows({{0, 1, 0}, {0, 0, 1}})}};
}

// X = image of (t, t') -> (t, t-1, t-2, t') in the 4-torus over Q.
inline std::vector<PullbackConstraint> surface_in_four_space() {
    return {{parse_laurent("x1 - x2 - 1", 2, Field::Q), rows({{1, 0, 0, 0}, {0, 1, 0, 0}})},
            {parse_laurent("x1 - x2 - 2", 2, Field::Q), rows({{1, 0, 0, 0}, {0, 0, 1, 0}})},
            {parse_laurent("x1 - x2 - 1", 2, Field::Q), rows({{0, 1, 0, 0}, {0, 0, 1, 0}})}};
}

// ---- valuation oracle -------------------------------------------------------

inline std::int64_t oracle_prime_valuation(Integer n, const Integer &p) {
    std::int64_t k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

// Order of vanishing of a polynomial at z = a via Taylor coefficients.
inline std::int64_t oracle_root_order(const Poly &poly, const Rational &a) {
    std::int64_t k = 0;
    Poly d = poly;
    while (!d.is_zero() && d.eval(a) == 0) {
        d = d.derivative();
        ++k;
    }
    return k;
}

inline std::int64_t oracle_valuation(const Scalar &c, const Place &p) {
    switch (p.kind()) {
    case Place::Kind::Generic:
        return 0;
    case Place::Kind::Prime: {
        const Rational &r = c.rational();
        return oracle_prime_valuation(abs(r.get_num()), p.prime_value()) -
               oracle_prime_valuation(r.get_den(), p.prime_value());
    }
    case Place::Kind::Irreducible: {
        const Poly &q = p.polynomial();
        if (q.degree() != 1)
            throw std::logic_error("oracle handles linear places only");
        const Rational root = -q.coeff(0) / q.coeff(1);
        const RationalFunction f = c.as_function();
        return oracle_root_order(f.numerator(), root) - oracle_root_order(f.denominator(), root);
    }
    case Place::Kind::Infinity: {
        const RationalFunction f = c.as_function();
        return f.denominator().degree() - f.numerator().degree();
    }
    default:
        throw std::logic_error("no oracle at the archimedean place");
    }
}

// Number of terms attaining min_i <u_i, v> + nu_p(a_i).
inline std::size_t oracle_argmin_size(const LaurentPoly &f, const Place &p, const RatVector &v) {
    std::vector<Rational> values;
    for (const auto &t : f.terms()) {
        Rational s = oracle_valuation(t.coefficient, p);
        for (std::size_t k = 0; k < v.size(); ++k)
            s += Rational(t.exponent[k]) * v[k];
        values.push_back(s);
    }
    const Rational m = *std::min_element(values.begin(), values.end());
    return static_cast<std::size_t>(std::count(values.begin(), values.end(), m));
}

// ---- hand-built cells ------------------------------------------------------

inline RatVector rat(std::initializer_list<long> xs) {
    RatVector out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

inline Rational dot(const RatVector &a, const RatVector &b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Rows d_k e_j - d_j e_k (k the first nonzero index of d, j != k) span the
// orthogonal complement of d.
inline std::vector<RatVector> complement(const RatVector &d) {
    const std::size_t n = d.size();
    std::size_t k = 0;
    while (d[k] == 0)
        ++k;
    std::vector<RatVector> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k)
            continue;
        RatVector row(n, 0);
        row[j] = d[k];
        row[k] = -d[j];
        out.push_back(std::move(row));
    }
    return out;
}

// base + R_{>=0} d
inline Polyhedron ray(const RatVector &base, const RatVector &d) {
    Polyhedron p(base.size());
    for (auto &row : complement(d)) {
        const Rational rhs = dot(row, base);
        p.add_equality(row, rhs);
    }
    RatVector neg;
    for (const auto &x : d)
        neg.push_back(-x);
    p.add_inequality(neg, -dot(d, base));
    return p;
}

// base + R d
inline Polyhedron line(const RatVector &base, const RatVector &d) {
    Polyhedron p(base.size());
    for (auto &row : complement(d)) {
        const Rational rhs = dot(row, base);
        p.add_equality(row, rhs);
    }
    return p;
}

inline Polyhedron segment(const RatVector &a, const RatVector &b) {
    RatVector d;
    for (std::size_t i = 0; i < a.size(); ++i)
        d.push_back(b[i] - a[i]);
    Polyhedron p = ray(a, d);
    p.add_inequality(d, dot(d, b));
    return p;
}

inline PolyhedralComplex complex_of(std::size_t rank, std::vector<Polyhedron> cells) {
    PolyhedralComplex c;
    c.rank = rank;
    for (auto &p : cells) {
        Cell cell;
        cell.polyhedron = std::move(p);
        c.cells.push_back(std::move(cell));
    }
    return c;
}

// ---- random generators ------------------------------------------------------

using Rng = std::mt19937_64;

inline long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Nonzero rational built from small primes so valuations are interesting.
inline Rational random_rational(Rng &rng) {
    static const long primes[] = {2, 3, 5, 7};
    Integer num = 1, den = 1;
    for (long p : primes) {
        const long e = uniform(rng, -2, 2);
        for (long k = 0; k < std::abs(e); ++k)
            (e > 0 ? num : den) *= p;
    }
    num *= uniform(rng, 1, 3);
    if (uniform(rng, 0, 1))
        num = -num;
    return make_rational(num, den);
}

inline Rational random_bounded_rational(Rng &rng, long bound) {
    Integer num = uniform(rng, 1, bound - 1), den = uniform(rng, 1, bound - 1);
    if (uniform(rng, 0, 1))
        num = -num;
    return make_rational(num, den);
}

// Product of powers of z - k (k in -2..2) with a rational factor.
inline RationalFunction random_function(Rng &rng, bool constant = false) {
    RationalFunction f(random_rational(rng));
    if (constant)
        return f;
    for (long k = -2; k <= 2; ++k) {
        const long e = uniform(rng, -1, 1);
        const Poly q({Rational(-k), Rational(1)});
        for (long j = 0; j < std::abs(e); ++j)
            f = e > 0 ? f * RationalFunction(q) : f / RationalFunction(q);
    }
    return f;
}

inline Exponent random_exponent(Rng &rng, std::size_t n, long lo, long hi) {
    Exponent u(n);
    for (auto &x : u)
        x = uniform(rng, lo, hi);
    return u;
}

// min(s, #lattice points) distinct exponents in [lo, hi]^n with nonzero random coefficients.
inline LaurentPoly random_poly(Rng &rng, std::size_t n, std::size_t s, Field field, long lo = 0, long hi = 3) {
    std::size_t available = 1;
    for (std::size_t k = 0; k < n && available < s; ++k)
        available *= static_cast<std::size_t>(hi - lo + 1);
    s = std::min(s, available);
    std::vector<Exponent> used;
    std::vector<Term> terms;
    while (terms.size() < s) {
        Exponent u = random_exponent(rng, n, lo, hi);
        if (std::find(used.begin(), used.end(), u) != used.end())
            continue;
        used.push_back(u);
        Scalar c = field == Field::Q ? Scalar(random_rational(rng)) : Scalar(random_function(rng));
        terms.push_back({std::move(u), std::move(c)});
    }
    return LaurentPoly(n, field, std::move(terms));
}

inline RatVector random_point(Rng &rng, std::size_t n, long bound = 20) {
    RatVector v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(make_rational(uniform(rng, -bound * 6, bound * 6), uniform(rng, 1, 6)));
    return v;
}

// A random point moved onto the tie locus of terms i and j (if possible).
inline RatVector random_tie_point(Rng &rng, const LaurentPoly &f, const Place &p) {
    const std::size_t n = f.rank();
    RatVector v = random_point(rng, n, 5);
    const std::size_t i = uniform(rng, 0, f.size() - 1);
    std::size_t j = uniform(rng, 0, f.size() - 2);
    if (j >= i)
        ++j;
    const auto &ui = f.term(i).exponent, &uj = f.term(j).exponent;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < n; ++k)
        if (ui[k] != uj[k])
            free.push_back(k);
    const std::size_t k = free[uniform(rng, 0, free.size() - 1)];
    // Solve <ui - uj, v> + c_i - c_j = 0 for v_k.
    Rational rest = Rational(oracle_valuation(f.term(i).coefficient, p) - oracle_valuation(f.term(j).coefficient, p));
    for (std::size_t m = 0; m < n; ++m)
        if (m != k)
            rest += Rational(ui[m] - uj[m]) * v[m];
    v[k] = -rest / Rational(ui[k] - uj[k]);
    return v;
}

} // namespace corpus
