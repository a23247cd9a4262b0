#include "amoeba/tropical.hpp"

#include <algorithm>
#include <optional>

#include "parallel.hpp"

namespace amoeba {

TropicalData tropical_data(const LaurentPoly &f, const Place &p) {
    if (p.kind() == Place::Kind::Archimedean)
        throw Error(ErrorCode::ArchimedeanNotSupported,
                    "tropical data is only defined at nonarchimedean places");
    if (!p.compatible_with(f.field()))
        throw Error(ErrorCode::PlaceFieldMismatch,
                    "place " + p.to_string() + " is not a place of " + std::string(field_name(f.field())));
    TropicalData data;
    data.rank = f.rank();
    for (const auto &t : f.terms()) {
        data.exponents.push_back(t.exponent);
        data.heights.emplace_back(static_cast<long>(valuation(t.coefficient, p)));
    }
    return data;
}

namespace {

Rational pairing(const Exponent &u, std::span<const Rational> v) {
    Rational s = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0)
            s += Rational(static_cast<long>(u[k])) * v[k];
    return s;
}

RatVector difference(const Exponent &a, const Exponent &b) {
    RatVector d(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        d[k] = Rational(static_cast<long>(a[k] - b[k]));
    return d;
}

std::int64_t lattice_length(const TropicalData &data, const TieSet &s) {
    Integer best = 0;
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            Integer g = 0;
            for (std::size_t k = 0; k < data.rank; ++k) {
                Integer d(static_cast<long>(data.exponents[s[a]][k] - data.exponents[s[b]][k]));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
            if (g > best)
                best = g;
        }
    }
    return best.get_si();
}

std::optional<Cell> pair_cell(const TropicalData &data, std::size_t i, std::size_t j) {
    const std::size_t n = data.rank;
    std::vector<Constraint> eqs, ineqs;
    eqs.push_back({difference(data.exponents[i], data.exponents[j]), data.heights[j] - data.heights[i]});
    for (std::size_t k = 0; k < data.exponents.size(); ++k)
        if (k != i && k != j)
            ineqs.push_back({difference(data.exponents[i], data.exponents[k]),
                             data.heights[k] - data.heights[i]});
    Polyhedron p(n, std::move(eqs), std::move(ineqs));
    if (dimension(p) != static_cast<int>(n) - 1)
        return std::nullopt;
    RatVector point = *relative_interior_point(p);
    Cell cell;
    cell.tie_sets.push_back(psi(data, point).argmin);
    cell.polyhedron = canonical_form(p);
    cell.multiplicity = lattice_length(data, cell.tie_sets.front());
    cell.dimension = static_cast<int>(n) - 1;
    return cell;
}

bool tie_less(const Cell &a, const Cell &b) { return a.tie_sets < b.tie_sets; }

// Drops cells contained in another; of equal cells the first survives.
std::vector<Cell> keep_maximal(std::vector<Cell> cells, Execution exec) {
    std::vector<char> drop(cells.size(), 0);
    detail::for_each_index(cells.size(), exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j == i || cells[i].dimension > cells[j].dimension)
                continue;
            if (!is_subset(cells[i].polyhedron, cells[j].polyhedron))
                continue;
            if (j < i || cells[i].dimension < cells[j].dimension ||
                !is_subset(cells[j].polyhedron, cells[i].polyhedron)) {
                drop[i] = 1;
                return;
            }
        }
    });
    std::vector<Cell> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!drop[i])
            out.push_back(std::move(cells[i]));
    return out;
}

LaurentPoly promoted(const LaurentPoly &f, Field field) {
    if (f.field() == field)
        return f;
    return LaurentPoly(f.rank(), field, f.terms());
}

} // namespace

PsiValue psi(const TropicalData &data, std::span<const Rational> v) {
    if (v.size() != data.rank)
        throw Error(ErrorCode::DimensionMismatch, "point length does not match rank");
    PsiValue out;
    for (std::size_t i = 0; i < data.exponents.size(); ++i) {
        Rational value = pairing(data.exponents[i], v) + data.heights[i];
        if (out.argmin.empty() || value < out.value) {
            out.value = value;
            out.argmin.assign(1, i);
        } else if (value == out.value) {
            out.argmin.push_back(i);
        }
    }
    return out;
}

PsiValue psi(const LaurentPoly &f, const Place &p, std::span<const Rational> v) {
    return psi(tropical_data(f, p), v);
}

PolyhedralComplex trop_hypersurface(const TropicalData &data, Execution exec) {
    const std::size_t s = data.exponents.size();
    if (s < 2)
        throw Error(ErrorCode::MonomialInput, "a single monomial has no tropical hypersurface");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            pairs.emplace_back(i, j);
    std::vector<std::optional<Cell>> found(pairs.size());
    detail::for_each_index(pairs.size(), exec, [&](std::size_t k) {
        found[k] = pair_cell(data, pairs[k].first, pairs[k].second);
    });

    PolyhedralComplex out;
    out.rank = data.rank;
    for (auto &cell : found) {
        if (!cell)
            continue;
        bool seen = std::any_of(out.cells.begin(), out.cells.end(),
                                [&](const Cell &c) { return c.tie_sets == cell->tie_sets; });
        if (!seen)
            out.cells.push_back(std::move(*cell));
    }
    std::sort(out.cells.begin(), out.cells.end(), tie_less);
    return out;
}

PolyhedralComplex trop_hypersurface(const LaurentPoly &f, const Place &p, Execution exec) {
    require_hypersurface(f);
    return trop_hypersurface(tropical_data(f, p), exec);
}

PolyhedralComplex generic_skeleton(const LaurentPoly &f, Execution exec) {
    return trop_hypersurface(f, Place::generic(), exec);
}

bool contains_zero(const PolyhedralComplex &c) {
    RatVector zero(c.rank, Rational(0));
    return complex_membership(c, zero).has_value();
}

PolyhedralComplex project_complex(const PolyhedralComplex &c, const IntMatrix &phi) {
    PolyhedralComplex out;
    out.rank = phi.size();
    std::vector<Cell> images;
    for (const auto &cell : c.cells) {
        Cell image;
        image.polyhedron = project(cell.polyhedron, phi);
        image.dimension = dimension(image.polyhedron);
        image.tie_sets = cell.tie_sets;
        if (image.dimension >= 0)
            images.push_back(std::move(image));
    }
    out.cells = keep_maximal(std::move(images), Execution::Serial);
    return out;
}

PullbackConstraint identity_pullback(const LaurentPoly &f) {
    return {f, identity_matrix(f.rank())};
}

std::pair<Field, std::size_t> system_shape(const std::vector<PullbackConstraint> &system) {
    if (system.empty())
        throw Error(ErrorCode::InvalidArgument, "empty constraint system");
    Field field = Field::Q;
    std::optional<std::size_t> n;
    for (const auto &c : system) {
        require_hypersurface(c.f);
        if (c.f.field() == Field::Qz)
            field = Field::Qz;
        if (c.map.size() != c.f.rank())
            throw Error(ErrorCode::DimensionMismatch, "pullback map has " + std::to_string(c.map.size()) +
                                                          " rows for a rank " +
                                                          std::to_string(c.f.rank()) + " constraint");
        for (const auto &row : c.map) {
            if (!n)
                n = row.size();
            if (row.size() != *n)
                throw Error(ErrorCode::DimensionMismatch, "pullback maps disagree on the ambient rank");
        }
    }
    if (!n || *n == 0)
        throw Error(ErrorCode::DimensionMismatch, "could not determine the ambient rank");
    return {field, *n};
}

std::vector<Place> system_bad_places(const std::vector<PullbackConstraint> &system) {
    auto [field, n] = system_shape(system);
    std::vector<Place> out;
    for (const auto &c : system) {
        auto places = bad_places(promoted(c.f, field));
        out.insert(out.end(), places.begin(), places.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PolyhedralComplex prevariety(const std::vector<PullbackConstraint> &system, const Place &p,
                             Execution exec) {
    auto [field, n] = system_shape(system);
    std::vector<std::vector<Cell>> pulled;
    for (const auto &c : system) {
        PolyhedralComplex trop = trop_hypersurface(promoted(c.f, field), p, exec);
        std::vector<Cell> cells;
        for (auto &cell : trop.cells) {
            cell.polyhedron = canonical_form(preimage(cell.polyhedron, c.map, n));
            cell.dimension = dimension(cell.polyhedron);
            cells.push_back(std::move(cell));
        }
        pulled.push_back(std::move(cells));
    }

    std::vector<Cell> current = std::move(pulled.front());
    for (std::size_t k = 1; k < pulled.size(); ++k) {
        const auto &next = pulled[k];
        std::vector<std::optional<Cell>> meets(current.size() * next.size());
        detail::for_each_index(meets.size(), exec, [&](std::size_t idx) {
            const Cell &a = current[idx / next.size()];
            const Cell &b = next[idx % next.size()];
            Polyhedron both = a.polyhedron.intersect(b.polyhedron);
            if (is_empty(both))
                return;
            Cell cell;
            cell.polyhedron = canonical_form(both);
            cell.dimension = dimension(cell.polyhedron);
            cell.tie_sets = a.tie_sets;
            cell.tie_sets.insert(cell.tie_sets.end(), b.tie_sets.begin(), b.tie_sets.end());
            cell.multiplicity = 1;
            meets[idx] = std::move(cell);
        });
        current.clear();
        for (auto &m : meets)
            if (m)
                current.push_back(std::move(*m));
        current = keep_maximal(std::move(current), exec);
    }

    PolyhedralComplex out;
    out.rank = n;
    out.cells = std::move(current);
    std::sort(out.cells.begin(), out.cells.end(), tie_less);
    return out;
}

bool AdelicAmoeba::is_hypersurface() const {
    return constraints.size() == 1 && constraints.front().map == identity_matrix(rank);
}

const PolyhedralComplex &AdelicAmoeba::at(const Place &p) const {
    if (p.kind() == Place::Kind::Archimedean)
        throw Error(ErrorCode::ArchimedeanNotSupported, "the archimedean amoeba is not a complex");
    for (const auto &[place, complex] : special)
        if (place == p)
            return complex;
    return generic;
}

AdelicAmoeba adelic_amoeba(const LaurentPoly &f, Execution exec) {
    require_hypersurface(f);
    AdelicAmoeba out;
    out.rank = f.rank();
    out.field = f.field();
    out.generic = generic_skeleton(f, exec);
    for (const auto &p : bad_places(f))
        out.special.emplace_back(p, trop_hypersurface(f, p, exec));
    out.constraints.push_back(identity_pullback(f));
    return out;
}

AdelicAmoeba adelic_amoeba(const std::vector<PullbackConstraint> &system, Execution exec) {
    auto [field, n] = system_shape(system);
    AdelicAmoeba out;
    out.rank = n;
    out.field = field;
    out.generic = prevariety(system, Place::generic(), exec);
    for (const auto &p : system_bad_places(system))
        out.special.emplace_back(p, prevariety(system, p, exec));
    out.constraints = system;
    return out;
}

} // namespace amoeba
