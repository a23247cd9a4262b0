#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amoeba/scalars.hpp"

namespace amoeba {

using Exponent = std::vector<std::int64_t>;

struct Term {
    Exponent exponent;
    Scalar coefficient;
};

/// f = a_1 x^{u_1} + ... + a_s x^{u_s} in canonical form: exponents distinct
/// and sorted lexicographically, coefficients nonzero and in the field of f.
class LaurentPoly {
  public:
    // Combines like terms and drops zeros; EmptyPolynomial if nothing survives,
    // RankMismatch if an exponent has the wrong length.
    LaurentPoly(std::size_t rank, Field field, std::vector<Term> terms);

    std::size_t rank() const { return rank_; }
    Field field() const { return field_; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term> &terms() const { return terms_; }
    const Term &term(std::size_t i) const { return terms_.at(i); }
    std::vector<Exponent> exponents() const;
    std::vector<Scalar> coefficients() const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly scaled(const Scalar &c) const;

    // Canonical text; parse_laurent(to_string()) reproduces the polynomial.
    std::string to_string() const;

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

  private:
    std::size_t rank_;
    Field field_;
    std::vector<Term> terms_;
};

/// Grammar: sums/differences of products of factors; a factor is an integer,
/// `z`, `x<i>` (1-based), or a parenthesized expression, optionally raised to
/// an integer power. Coefficients may be rational functions of z over Q(z).
LaurentPoly parse_laurent(std::string_view text, std::size_t rank, Field field);
// Largest variable index mentioned (0 if none).
std::size_t infer_rank(std::string_view text);
// Q(z) iff the text mentions z.
Field infer_field(std::string_view text);
Scalar parse_scalar(std::string_view text, Field field);

// Divides by the coefficient of the lexicographically smallest exponent.
LaurentPoly normalize(const LaurentPoly &f);

// MonomialInput when f has a single term (V(f) is empty in the torus).
void require_hypersurface(const LaurentPoly &f);

struct NewtonPolytope {
    std::vector<Exponent> points;
    std::vector<std::size_t> vertex_indices;
};

NewtonPolytope newton_polytope(const LaurentPoly &f);
NewtonPolytope newton_polytope(const std::vector<Exponent> &points);
// Weights lambda >= 0 over the vertices, summing to 1, with
// sum lambda_k * vertex_k = points[index]; nullopt if none exists.
std::optional<std::vector<Rational>> convex_combination_certificate(const NewtonPolytope &polytope,
                                                                    std::size_t index);

/// Finite places where the coefficient ratios a_j / a_1 are not all units.
std::vector<Place> bad_places(const LaurentPoly &f);

} // namespace amoeba
