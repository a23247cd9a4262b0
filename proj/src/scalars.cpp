#include "amoeba/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "parser.hpp"

namespace amoeba {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PlaceFieldMismatch: return "PlaceFieldMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidPlace: return "InvalidPlace";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::MonomialInput: return "MonomialInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ArchimedeanNotSupported: return "ArchimedeanNotSupported";
    case ErrorCode::TermCountMismatch: return "TermCountMismatch";
    case ErrorCode::DegenerateSlice: return "DegenerateSlice";
    case ErrorCode::DependentDirection: return "DependentDirection";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::MissingImagePresentation: return "MissingImagePresentation";
    case ErrorCode::FactorizationLimit: return "FactorizationLimit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantFailure: return "InvariantFailure";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rationals

Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0)
        throw Error(ErrorCode::ZeroInput, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer &value) { return value.get_str(); }

std::string to_string(const Rational &value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start ||
            !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::strong_ordering compare(const Rational &a, const Rational &b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational &c) { return Poly(std::vector<Rational>{c}); }
Poly Poly::z() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational &c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational &Poly::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorCode::ZeroInput, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Poly Poly::monic() const {
    if (is_zero())
        return *this;
    Rational inv = 1 / leading();
    return scaled(inv);
}

Rational Poly::eval(const Rational &x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1)
        return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::scaled(const Rational &c) const {
    std::vector<Rational> v(coeffs_);
    for (auto &x : v)
        x *= c;
    return Poly(std::move(v));
}

Poly Poly::primitive_part() const {
    if (is_zero())
        return *this;
    Integer l = 1;
    for (const auto &c : coeffs_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    Integer g = 0;
    for (const auto &c : coeffs_) {
        Integer n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational factor = make_rational(l, g);
    if (leading() < 0)
        factor = -factor;
    return scaled(factor);
}

Poly Poly::operator-() const { return scaled(-1); }

Poly operator+(const Poly &a, const Poly &b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

std::strong_ordering operator<=>(const Poly &a, const Poly &b) {
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    for (long i = a.degree(); i >= 0; --i) {
        auto c = compare(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        const Rational &c = coeffs_[d];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (d == 0) {
            out += amoeba::to_string(mag);
            continue;
        }
        if (mag != 1)
            out += amoeba::to_string(mag) + "*";
        out += "z";
        if (d > 1)
            out += "^" + std::to_string(d);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    if (b.is_zero())
        throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly(), a};
    std::vector<Rational> rem(a.coefficients());
    std::vector<Rational> quot(a.degree() - b.degree() + 1);
    const Rational &lb = b.leading();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        Rational q = rem[i + b.degree()] / lb;
        quot[i] = q;
        if (q == 0)
            continue;
        for (long j = 0; j <= b.degree(); ++j)
            rem[i + j] -= q * b.coefficients()[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow(const Poly &base, unsigned exponent) {
    Poly result = Poly::constant(1);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * base;
    return result;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Rational &c)
    : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero())
        throw Error(ErrorCode::ZeroInput, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    Rational lc = den.leading();
    num_ = num.scaled(1 / lc);
    den_ = den.scaled(1 / lc);
}

Rational RationalFunction::constant_value() const {
    if (!is_constant())
        throw Error(ErrorCode::FieldMismatch, "rational function " + to_string() + " is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) { return a + (-b); }

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
    if (b.is_zero())
        throw Error(ErrorCode::ZeroInput, "division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
    if (den_ == Poly::constant(1))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Scalar

std::string_view field_name(Field field) { return field == Field::Q ? "Q" : "Q(z)"; }

Field parse_field(std::string_view text) {
    if (text == "Q" || text == "q")
        return Field::Q;
    if (text == "Q(z)" || text == "Qz" || text == "qz")
        return Field::Qz;
    throw Error(ErrorCode::InvalidArgument, "unknown field '" + std::string(text) + "'");
}

Field Scalar::field() const {
    return std::holds_alternative<Rational>(value_) ? Field::Q : Field::Qz;
}

bool Scalar::is_zero() const {
    return std::visit([](const auto &v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
            return v == 0;
        else
            return v.is_zero();
    }, value_);
}

const Rational &Scalar::rational() const {
    if (auto *r = std::get_if<Rational>(&value_))
        return *r;
    throw Error(ErrorCode::FieldMismatch, "expected a rational, got " + to_string());
}

const RationalFunction &Scalar::function() const {
    if (auto *f = std::get_if<RationalFunction>(&value_))
        return *f;
    throw Error(ErrorCode::FieldMismatch, "expected a rational function, got " + to_string());
}

RationalFunction Scalar::as_function() const {
    if (auto *r = std::get_if<Rational>(&value_))
        return RationalFunction(*r);
    return std::get<RationalFunction>(value_);
}

Scalar Scalar::in_field(Field target) const {
    if (target == Field::Qz)
        return Scalar(as_function());
    if (field() == Field::Q)
        return *this;
    return Scalar(function().constant_value());
}

Scalar Scalar::operator-() const {
    if (field() == Field::Q)
        return Scalar(Rational(-rational()));
    return Scalar(-function());
}

Scalar operator+(const Scalar &a, const Scalar &b) {
    if (a.field() == Field::Q && b.field() == Field::Q)
        return Scalar(Rational(a.rational() + b.rational()));
    return Scalar(a.as_function() + b.as_function());
}

Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }

Scalar operator*(const Scalar &a, const Scalar &b) {
    if (a.field() == Field::Q && b.field() == Field::Q)
        return Scalar(Rational(a.rational() * b.rational()));
    return Scalar(a.as_function() * b.as_function());
}

Scalar operator/(const Scalar &a, const Scalar &b) {
    if (b.is_zero())
        throw Error(ErrorCode::ZeroInput, "division by zero");
    if (a.field() == Field::Q && b.field() == Field::Q)
        return Scalar(Rational(a.rational() / b.rational()));
    return Scalar(a.as_function() / b.as_function());
}

bool operator==(const Scalar &a, const Scalar &b) {
    if (a.field() == Field::Q && b.field() == Field::Q)
        return a.rational() == b.rational();
    return a.as_function() == b.as_function();
}

std::string Scalar::to_string() const {
    if (field() == Field::Q)
        return amoeba::to_string(rational());
    return function().to_string();
}

// ---------------------------------------------------------------------------
// Integer number theory

bool is_prime(const Integer &n) {
    if (n < 2)
        return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    // Miller-Rabin with the first 13 prime bases is deterministic below 3.3e24.
    static const Integer bound("3317044064679887385961981");
    if (n >= bound)
        return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
    Integer d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    Integer nm1 = n - 1;
    for (int a : small) {
        Integer x;
        Integer base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1)
            continue;
        bool composite = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer &n) {
    Integer m = abs(n);
    if (m == 0)
        throw Error(ErrorCode::ZeroInput, "cannot factor zero");
    std::vector<std::pair<Integer, unsigned>> out;
    auto strip = [&](const Integer &p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };
    strip(Integer(2));
    for (Integer p = 3; p * p <= m; p += 2)
        strip(p);
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

std::vector<Integer> positive_divisors(const Integer &n) {
    std::vector<Integer> divs{1};
    for (const auto &[p, e] : factor_integer(n)) {
        std::size_t count = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// ---------------------------------------------------------------------------
// Polynomial factorization over Q

namespace {

// Square-free decomposition (Yun); returns (factor, multiplicity) with
// monic square-free factors of positive degree.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly &f) {
    std::vector<std::pair<Poly, unsigned>> out;
    Poly a = f.monic();
    Poly da = a.derivative();
    Poly g = gcd(a, da);
    Poly b = divmod(a, g).first;
    Poly c = divmod(da, g).first;
    Poly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly ai = gcd(b, d);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
        if (ai.degree() > 0)
            out.emplace_back(ai, i);
        ++i;
    }
    return out;
}

// Lagrange interpolation through (xs[i], ys[i]); coefficients low degree first.
Poly interpolate(const std::vector<Integer> &xs, const std::vector<Integer> &ys) {
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i)
                continue;
            basis = basis * Poly(std::vector<Rational>{Rational(-xs[j]), 1});
            denom *= Rational(xs[i] - xs[j]);
        }
        result = result + basis.scaled(Rational(ys[i]) / denom);
    }
    return result;
}

bool has_integer_coefficients(const Poly &p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational &c) { return c.get_den() == 1; });
}

constexpr double kKroneckerLimit = 5e6;

// Kronecker's method: search for an integer factor of degree k of the
// primitive square-free polynomial g that has no rational roots.
std::optional<Poly> kronecker_factor(const Poly &g, long k) {
    std::vector<Integer> xs, vals;
    for (long t = 0; static_cast<long>(xs.size()) < k + 1; ++t) {
        Integer x = (t % 2 == 0) ? Integer(t / 2) : Integer(-(t + 1) / 2);
        Rational v = g.eval(Rational(x));
        if (v == 0)
            continue;
        xs.push_back(x);
        vals.push_back(v.get_num());
    }
    std::vector<std::vector<Integer>> choices;
    double combos = 1;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        std::vector<Integer> divs = positive_divisors(vals[i]);
        std::vector<Integer> signed_divs;
        for (const auto &d : divs) {
            signed_divs.push_back(d);
            if (i > 0)
                signed_divs.push_back(-d);
        }
        combos *= static_cast<double>(signed_divs.size());
        choices.push_back(std::move(signed_divs));
    }
    if (combos > kKroneckerLimit)
        throw Error(ErrorCode::FactorizationLimit,
                    "polynomial " + g.to_string() + " exceeds the factorization search limit");
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<Integer> ys(choices.size());
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            ys[i] = choices[i][idx[i]];
        Poly h = interpolate(xs, ys);
        if (h.degree() == k && has_integer_coefficients(h) && divmod(g, h).second.is_zero())
            return h;
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == choices[pos].size())
            idx[pos++] = 0;
        if (pos == idx.size())
            break;
    }
    return std::nullopt;
}

void factor_squarefree(const Poly &f, std::vector<Poly> &out) {
    Poly g = f.primitive_part();
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1) {
        out.push_back(g.monic());
        return;
    }
    if (g.coeff(0) == 0) {
        out.push_back(Poly::z());
        factor_squarefree(divmod(g, Poly::z()).first, out);
        return;
    }
    // Rational roots p/q with p | g(0) and q | lead.
    Integer a0 = g.coeff(0).get_num();
    Integer an = g.leading().get_num();
    for (const auto &p : positive_divisors(a0)) {
        for (const auto &q : positive_divisors(an)) {
            for (int sign : {1, -1}) {
                Rational r = make_rational(p * sign, q);
                if (g.eval(r) == 0) {
                    Poly lin(std::vector<Rational>{-r, 1});
                    out.push_back(lin);
                    factor_squarefree(divmod(g, lin).first, out);
                    return;
                }
            }
        }
    }
    if (g.degree() <= 3) {
        out.push_back(g.monic());
        return;
    }
    for (long k = 2; k <= g.degree() / 2; ++k) {
        if (auto h = kronecker_factor(g, k)) {
            factor_squarefree(*h, out);
            factor_squarefree(divmod(g, *h).first, out);
            return;
        }
    }
    out.push_back(g.monic());
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor_polynomial(const Poly &p) {
    if (p.is_zero())
        throw Error(ErrorCode::ZeroInput, "cannot factor the zero polynomial");
    std::map<Poly, unsigned> acc;
    for (const auto &[part, mult] : squarefree_decomposition(p)) {
        std::vector<Poly> factors;
        factor_squarefree(part, factors);
        for (auto &q : factors)
            acc[q] += mult;
    }
    return {acc.begin(), acc.end()};
}

bool is_irreducible(const Poly &p) {
    if (p.degree() < 1)
        return false;
    auto f = factor_polynomial(p);
    return f.size() == 1 && f.front().second == 1;
}

// ---------------------------------------------------------------------------
// Places

Place Place::prime(const Integer &p) {
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidPlace, amoeba::to_string(p) + " is not a prime");
    Place place(Kind::Prime);
    place.prime_ = p;
    return place;
}

Place Place::archimedean() { return Place(Kind::Archimedean); }
Place Place::infinity() { return Place(Kind::Infinity); }
Place Place::generic() { return Place(Kind::Generic); }

Place Place::irreducible(const Poly &q) {
    if (!is_irreducible(q))
        throw Error(ErrorCode::InvalidPlace, q.to_string() + " is not irreducible over Q");
    Place place(Kind::Irreducible);
    place.poly_ = q.monic();
    return place;
}

Place Place::parse(std::string_view text) {
    if (text == "arch")
        return archimedean();
    if (text == "inf")
        return infinity();
    if (text == "generic")
        return generic();
    if (text.starts_with("p:"))
        return prime(parse_rational(text.substr(2)).get_num());
    if (text.starts_with("q:")) {
        Scalar s = detail::parse_scalar_expression(text.substr(2), Field::Qz);
        const RationalFunction &f = s.function();
        if (f.denominator() != Poly::constant(1))
            throw Error(ErrorCode::InvalidPlace, "place polynomial must be a polynomial");
        return irreducible(f.numerator());
    }
    throw Error(ErrorCode::InvalidPlace, "unknown place '" + std::string(text) + "'");
}

bool Place::compatible_with(Field field) const {
    switch (kind_) {
    case Kind::Prime:
    case Kind::Archimedean: return field == Field::Q;
    case Kind::Irreducible:
    case Kind::Infinity: return field == Field::Qz;
    case Kind::Generic: return true;
    }
    return false;
}

std::string Place::to_string() const {
    switch (kind_) {
    case Kind::Prime: return "p:" + amoeba::to_string(prime_);
    case Kind::Archimedean: return "arch";
    case Kind::Irreducible: return "q:" + poly_.to_string();
    case Kind::Infinity: return "inf";
    case Kind::Generic: return "generic";
    }
    return {};
}

std::strong_ordering operator<=>(const Place &a, const Place &b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0)
        return c;
    if (a.kind_ == Place::Kind::Prime) {
        int c = cmp(a.prime_, b.prime_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (a.kind_ == Place::Kind::Irreducible)
        return a.poly_ <=> b.poly_;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Valuations

namespace {

std::int64_t integer_valuation(const Integer &n, const Integer &p) {
    Integer rest;
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::int64_t poly_order(Poly f, const Poly &q) {
    std::int64_t k = 0;
    while (true) {
        auto [quot, rem] = divmod(f, q);
        if (!rem.is_zero())
            return k;
        f = std::move(quot);
        ++k;
    }
}

double log_abs_integer(const Integer &n) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

void require_nonzero(const Scalar &a) {
    if (a.is_zero())
        throw Error(ErrorCode::ZeroInput, "valuation of zero is undefined");
}

} // namespace

std::int64_t valuation(const Scalar &a, const Place &p) {
    require_nonzero(a);
    switch (p.kind()) {
    case Place::Kind::Generic: return 0;
    case Place::Kind::Archimedean:
        throw Error(ErrorCode::PlaceFieldMismatch, "no valuation at the archimedean place");
    default: break;
    }
    if (!p.compatible_with(a.field()))
        throw Error(ErrorCode::PlaceFieldMismatch,
                    "place " + p.to_string() + " does not belong to field " +
                        std::string(field_name(a.field())));
    if (p.kind() == Place::Kind::Prime) {
        const Rational &r = a.rational();
        return integer_valuation(r.get_num(), p.prime_value()) -
               integer_valuation(r.get_den(), p.prime_value());
    }
    const RationalFunction &f = a.function();
    if (p.kind() == Place::Kind::Infinity)
        return f.denominator().degree() - f.numerator().degree();
    return poly_order(f.numerator(), p.polynomial()) - poly_order(f.denominator(), p.polynomial());
}

double log_abs(const Scalar &a, const Place &p) {
    require_nonzero(a);
    switch (p.kind()) {
    case Place::Kind::Archimedean: {
        if (a.field() != Field::Q)
            throw Error(ErrorCode::PlaceFieldMismatch, "archimedean place requires a rational");
        const Rational &r = a.rational();
        return -(log_abs_integer(r.get_num()) - log_abs_integer(r.get_den()));
    }
    case Place::Kind::Prime:
        return static_cast<double>(valuation(a, p)) * log_abs_integer(p.prime_value());
    case Place::Kind::Irreducible:
        return static_cast<double>(valuation(a, p) * p.polynomial().degree());
    case Place::Kind::Infinity:
    case Place::Kind::Generic: return static_cast<double>(valuation(a, p));
    }
    return 0.0;
}

double product_formula_residual(const Rational &a) {
    require_nonzero(Scalar(a));
    double sum = log_abs(Scalar(a), Place::archimedean());
    for (const auto &place : support_places(std::vector<Scalar>{Scalar(a)}))
        sum += log_abs(Scalar(a), place);
    return sum;
}

std::int64_t product_formula_residual(const RationalFunction &a) {
    Scalar s(a);
    require_nonzero(s);
    std::int64_t sum = valuation(s, Place::infinity());
    for (const auto &place : support_places(std::vector<Scalar>{s})) {
        if (place.kind() == Place::Kind::Irreducible)
            sum += valuation(s, place) * place.polynomial().degree();
    }
    return sum;
}

std::vector<Place> support_places(std::span<const Scalar> values) {
    bool function_field = std::any_of(values.begin(), values.end(),
                                      [](const Scalar &s) { return s.field() == Field::Qz; });
    std::set<Place> places;
    for (const auto &v : values) {
        require_nonzero(v);
        if (!function_field) {
            const Rational &r = v.rational();
            for (const Integer *n : {&r.get_num(), &r.get_den()})
                for (const auto &fp : factor_integer(*n))
                    places.insert(Place::prime(fp.first));
            continue;
        }
        RationalFunction f = v.as_function();
        for (const Poly *p : {&f.numerator(), &f.denominator()}) {
            for (const auto &fp : factor_polynomial(*p)) {
                places.insert(Place::irreducible(fp.first));
            }
        }
        if (f.numerator().degree() != f.denominator().degree())
            places.insert(Place::infinity());
    }
    return {places.begin(), places.end()};
}

} // namespace amoeba
