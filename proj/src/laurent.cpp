#include "amoeba/laurent.hpp"

#include <algorithm>
#include <map>

#include "amoeba/polyhedral.hpp"
#include "parser.hpp"

namespace amoeba {

LaurentPoly::LaurentPoly(std::size_t rank, Field field, std::vector<Term> terms)
    : rank_(rank), field_(field) {
    std::map<Exponent, Scalar> combined;
    for (auto &t : terms) {
        if (t.exponent.size() != rank)
            throw Error(ErrorCode::RankMismatch, "exponent of length " +
                                                     std::to_string(t.exponent.size()) +
                                                     " in a rank " + std::to_string(rank) + " polynomial");
        Scalar c = t.coefficient.in_field(field);
        auto [it, inserted] = combined.emplace(std::move(t.exponent), c);
        if (!inserted)
            it->second = it->second + c;
    }
    for (auto &[u, c] : combined)
        if (!c.is_zero())
            terms_.push_back({u, c});
    if (terms_.empty())
        throw Error(ErrorCode::EmptyPolynomial, "polynomial has no terms");
}

std::vector<Exponent> LaurentPoly::exponents() const {
    std::vector<Exponent> out;
    for (const auto &t : terms_)
        out.push_back(t.exponent);
    return out;
}

std::vector<Scalar> LaurentPoly::coefficients() const {
    std::vector<Scalar> out;
    for (const auto &t : terms_)
        out.push_back(t.coefficient);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar &c) const {
    if (c.is_zero())
        throw Error(ErrorCode::ZeroInput, "scaling by zero");
    std::vector<Term> terms = terms_;
    for (auto &t : terms)
        t.coefficient = t.coefficient * c;
    Field field = c.field() == Field::Qz ? Field::Qz : field_;
    return LaurentPoly(rank_, field, std::move(terms));
}

namespace {

std::string monomial_text(const Exponent &u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "x" + std::to_string(i + 1);
        if (u[i] != 1)
            out += "^" + std::to_string(u[i]);
    }
    return out;
}

// Rational coefficient of a term if it has one (Q, or a constant of Q(z)).
std::optional<Rational> rational_value(const Scalar &c) {
    if (c.field() == Field::Q)
        return c.rational();
    if (c.function().is_constant())
        return c.function().constant_value();
    return std::nullopt;
}

} // namespace

std::string LaurentPoly::to_string() const {
    std::string out;
    for (const auto &t : terms_) {
        std::string mono = monomial_text(t.exponent);
        std::string coeff;
        bool negative = false;
        if (auto r = rational_value(t.coefficient)) {
            negative = *r < 0;
            Rational a = abs(*r);
            if (a != 1 || mono.empty())
                coeff = amoeba::to_string(a);
        } else {
            coeff = "(" + t.coefficient.function().to_string() + ")";
        }
        std::string body = coeff;
        if (!mono.empty())
            body += (body.empty() ? "" : "*") + mono;
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.rank_ != b.rank_ || a.field_ != b.field_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponent != b.terms_[i].exponent ||
            !(a.terms_[i].coefficient == b.terms_[i].coefficient))
            return false;
    return true;
}

LaurentPoly parse_laurent(std::string_view text, std::size_t rank, Field field) {
    auto terms = detail::parse_expression(text, rank, field);
    std::vector<Term> out;
    for (auto &[u, c] : terms)
        out.push_back({u, c});
    return LaurentPoly(rank, field, std::move(out));
}

std::size_t infer_rank(std::string_view text) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x')
            continue;
        std::size_t j = i + 1, value = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
            value = value * 10 + static_cast<std::size_t>(text[j] - '0');
            if (value > 1'000'000)
                throw SyntaxError(i, "variable index too large");
            ++j;
        }
        best = std::max(best, value);
    }
    return best;
}

Field infer_field(std::string_view text) {
    return text.find('z') == std::string_view::npos ? Field::Q : Field::Qz;
}

Scalar parse_scalar(std::string_view text, Field field) {
    return detail::parse_scalar_expression(text, field);
}

LaurentPoly normalize(const LaurentPoly &f) {
    Scalar lead = f.term(0).coefficient;
    std::vector<Term> terms = f.terms();
    for (auto &t : terms)
        t.coefficient = t.coefficient / lead;
    return LaurentPoly(f.rank(), f.field(), std::move(terms));
}

void require_hypersurface(const LaurentPoly &f) {
    if (f.is_monomial())
        throw Error(ErrorCode::MonomialInput,
                    "a single monomial has no zeros in the torus: " + f.to_string());
}

namespace {

// LP { lambda >= 0, sum lambda = 1, sum lambda_k q_k = target }.
std::optional<std::vector<Rational>> hull_weights(const std::vector<const Exponent *> &pool,
                                                  const Exponent &target) {
    const std::size_t k = pool.size();
    if (k == 0)
        return std::nullopt;
    std::vector<Constraint> eqs, ineqs;
    for (std::size_t d = 0; d < target.size(); ++d) {
        RatVector row(k);
        for (std::size_t j = 0; j < k; ++j)
            row[j] = Rational(static_cast<long>((*pool[j])[d]));
        eqs.push_back({std::move(row), Rational(static_cast<long>(target[d]))});
    }
    eqs.push_back({RatVector(k, Rational(1)), Rational(1)});
    for (std::size_t j = 0; j < k; ++j) {
        RatVector row(k, Rational(0));
        row[j] = -1;
        ineqs.push_back({std::move(row), Rational(0)});
    }
    auto point = feasible_point(Polyhedron(k, std::move(eqs), std::move(ineqs)));
    if (!point)
        return std::nullopt;
    return *point;
}

} // namespace

NewtonPolytope newton_polytope(const std::vector<Exponent> &points) {
    NewtonPolytope out{points, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool earlier_copy = false;
        std::vector<const Exponent *> others;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (points[j] == points[i]) {
                earlier_copy |= j < i;
                continue;
            }
            others.push_back(&points[j]);
        }
        if (earlier_copy)
            continue;
        if (!hull_weights(others, points[i]))
            out.vertex_indices.push_back(i);
    }
    return out;
}

NewtonPolytope newton_polytope(const LaurentPoly &f) { return newton_polytope(f.exponents()); }

std::optional<std::vector<Rational>> convex_combination_certificate(const NewtonPolytope &polytope,
                                                                    std::size_t index) {
    if (index >= polytope.points.size())
        throw Error(ErrorCode::InvalidArgument, "point index out of range");
    std::vector<const Exponent *> vertices;
    for (auto v : polytope.vertex_indices)
        vertices.push_back(&polytope.points[v]);
    return hull_weights(vertices, polytope.points[index]);
}

std::vector<Place> bad_places(const LaurentPoly &f) {
    std::vector<Scalar> ratios;
    const Scalar &first = f.term(0).coefficient;
    for (const auto &t : f.terms())
        ratios.push_back(t.coefficient / first);
    return support_places(ratios);
}

} // namespace amoeba
