#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "amoeba/error.hpp"

namespace amoeba {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer &num, const Integer &den);
std::string to_string(const Integer &value);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational &value);
// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
std::strong_ordering compare(const Rational &a, const Rational &b);

/// Univariate polynomial over Q in the variable z, stored low degree first
/// with no trailing zeros. The zero polynomial has degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);

    static Poly constant(const Rational &c);
    static Poly z();
    static Poly monomial(const Rational &c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const;
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    const Rational &leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const;

    Poly monic() const;
    Rational eval(const Rational &x) const;
    Poly derivative() const;
    Poly scaled(const Rational &c) const;
    // Multiply through by the lcm of denominators and divide by the content:
    // the result has coprime integer coefficients and positive leading coefficient.
    Poly primitive_part() const;

    Poly operator-() const;
    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend bool operator==(const Poly &a, const Poly &b) = default;

    // Degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly &a, const Poly &b);

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws ZeroInput on division by zero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);
Poly pow(const Poly &base, unsigned exponent);

/// Element of Q(z): numerator/denominator coprime, denominator monic.
class RationalFunction {
  public:
    RationalFunction() : den_(Poly::constant(1)) {}
    RationalFunction(const Rational &c);
    RationalFunction(Poly p);
    RationalFunction(Poly num, Poly den);

    const Poly &numerator() const { return num_; }
    const Poly &denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Requires is_constant().
    Rational constant_value() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
    friend bool operator==(const RationalFunction &a, const RationalFunction &b) = default;

    std::string to_string() const;

  private:
    Poly num_;
    Poly den_;
};

enum class Field { Q, Qz };

std::string_view field_name(Field field);
Field parse_field(std::string_view text);

/// A coefficient: an element of Q or of Q(z). Mixed arithmetic promotes to Q(z).
class Scalar {
  public:
    Scalar() : value_(Rational(0)) {}
    Scalar(const Rational &r) : value_(r) {}
    Scalar(long r) : value_(Rational(r)) {}
    Scalar(const RationalFunction &f) : value_(f) {}

    Field field() const;
    bool is_zero() const;
    // FieldMismatch if the scalar lives in the other field.
    const Rational &rational() const;
    const RationalFunction &function() const;
    RationalFunction as_function() const;
    // Q(z) -> Q only succeeds for constants.
    Scalar in_field(Field field) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar &a, const Scalar &b);
    friend Scalar operator-(const Scalar &a, const Scalar &b);
    friend Scalar operator*(const Scalar &a, const Scalar &b);
    friend Scalar operator/(const Scalar &a, const Scalar &b);
    friend bool operator==(const Scalar &a, const Scalar &b);

    std::string to_string() const;

  private:
    std::variant<Rational, RationalFunction> value_;
};

/// A place of Q or Q(z), plus the Generic pseudo-place standing for the
/// cofinite set of places where every coefficient in play is a unit.
class Place {
  public:
    enum class Kind { Prime, Archimedean, Irreducible, Infinity, Generic };

    // InvalidPlace unless p is a positive prime.
    static Place prime(const Integer &p);
    static Place archimedean();
    // Normalizes q to be monic; InvalidPlace unless q is irreducible over Q.
    static Place irreducible(const Poly &q);
    static Place infinity();
    static Place generic();
    // "p:2", "q:z-1", "inf", "arch", "generic".
    static Place parse(std::string_view text);

    Kind kind() const { return kind_; }
    const Integer &prime_value() const { return prime_; }
    const Poly &polynomial() const { return poly_; }
    // Nonarchimedean places, including Generic.
    bool is_nonarchimedean() const { return kind_ != Kind::Archimedean; }
    bool compatible_with(Field field) const;

    std::string to_string() const;

    friend bool operator==(const Place &a, const Place &b) = default;
    friend std::strong_ordering operator<=>(const Place &a, const Place &b);

  private:
    Place(Kind kind) : kind_(kind) {}
    Kind kind_;
    Integer prime_;
    Poly poly_;
};

/// Exponent of p in a (finite places); 0 at Generic.
/// ZeroInput for a = 0, PlaceFieldMismatch for incompatible place/field or the archimedean place.
std::int64_t valuation(const Scalar &a, const Place &p);

/// -log|a|_p with normalized absolute values: nu_p(a) log p at primes,
/// deg(q) nu_q(a) at irreducibles, nu_inf(a) at infinity, -log|a| at the archimedean place.
double log_abs(const Scalar &a, const Place &p);

/// Sum over all places of -log|a|_p for a rational; zero up to rounding.
double product_formula_residual(const Rational &a);
/// Exact sum of deg(q) nu_q(a) over monic irreducibles plus nu_inf(a).
std::int64_t product_formula_residual(const RationalFunction &a);

/// Finite places at which some entry has nonzero valuation, sorted.
std::vector<Place> support_places(std::span<const Scalar> values);

// Number theory helpers.
bool is_prime(const Integer &n);
// Prime factorization of |n| >= 1 by trial division.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer &n);
std::vector<Integer> positive_divisors(const Integer &n);
// Monic irreducible factors over Q with multiplicities, sorted. Constant input gives {}.
std::vector<std::pair<Poly, unsigned>> factor_polynomial(const Poly &p);
bool is_irreducible(const Poly &p);

} // namespace amoeba
