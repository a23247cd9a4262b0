#include "amoeba/lattice.hpp"

#include <algorithm>

namespace amoeba {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntVector to_int_vector(std::span<const std::int64_t> v) {
    IntVector out;
    out.reserve(v.size());
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

RatVector to_rat_vector(std::span<const Integer> v) {
    return RatVector(v.begin(), v.end());
}

std::size_t rank(const std::vector<RatVector> &rows) {
    if (rows.empty())
        return 0;
    std::vector<RatVector> a(rows);
    std::size_t n = a.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < a.size(); ++col) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][col] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][col] == 0)
                continue;
            Rational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < n; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMatrix &rows) {
    std::vector<RatVector> r;
    r.reserve(rows.size());
    for (const auto &row : rows)
        r.push_back(to_rat_vector(row));
    return rank(r);
}

IntVector primitive_integer(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto &x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto &x : v)
        out.push_back(x.get_num() * (l / x.get_den()));
    return primitive_integer(std::span<const Integer>(out));
}

IntVector primitive_integer(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto &x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    IntVector out(v.begin(), v.end());
    if (g > 1)
        for (auto &x : out)
            x /= g;
    return out;
}

namespace {

void sub_multiple(IntVector &target, const IntVector &source, const Integer &q) {
    for (std::size_t j = 0; j < target.size(); ++j)
        target[j] -= q * source[j];
}

Integer floor_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix a) {
    if (a.empty())
        return a;
    std::size_t n = a.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < a.size(); ++col) {
        bool found = false;
        while (true) {
            std::size_t best = a.size();
            for (std::size_t i = r; i < a.size(); ++i)
                if (a[i][col] != 0 && (best == a.size() || abs(a[i][col]) < abs(a[best][col])))
                    best = i;
            if (best == a.size())
                break;
            found = true;
            std::swap(a[r], a[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.size(); ++i) {
                if (a[i][col] == 0)
                    continue;
                sub_multiple(a[i], a[r], floor_div(a[i][col], a[r][col]));
                if (a[i][col] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!found)
            continue;
        if (a[r][col] < 0)
            for (auto &x : a[r])
                x = -x;
        for (std::size_t i = 0; i < r; ++i)
            if (a[i][col] != 0)
                sub_multiple(a[i], a[r], floor_div(a[i][col], a[r][col]));
        ++r;
    }
    a.resize(r);
    return a;
}

IntMatrix integer_kernel(const IntMatrix &a, std::size_t ncols) {
    std::size_t m = a.size();
    // Row-reduce [A^T | I]; rows whose A^T part vanishes span the kernel.
    IntMatrix aug(ncols, IntVector(m + ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            aug[i][j] = a[j][i];
        aug[i][m + i] = 1;
    }
    IntMatrix h = hermite_normal_form(std::move(aug));
    IntMatrix kernel;
    for (const auto &row : h) {
        if (std::all_of(row.begin(), row.begin() + static_cast<long>(m),
                        [](const Integer &x) { return x == 0; }))
            kernel.emplace_back(row.begin() + static_cast<long>(m), row.end());
    }
    return hermite_normal_form(std::move(kernel));
}

IntMatrix saturate(const IntMatrix &rows, std::size_t ncols) {
    return integer_kernel(integer_kernel(rows, ncols), ncols);
}

bool extends_to_basis(const IntMatrix &rows, std::size_t ncols) {
    if (rank(rows) != rows.size())
        return false;
    return hermite_normal_form(rows) == saturate(rows, ncols);
}

std::optional<IntMatrix> integer_right_inverse(const IntMatrix &phi, std::size_t ncols) {
    std::size_t m = phi.size();
    IntMatrix aug(ncols, IntVector(m + ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            aug[i][j] = phi[j][i];
        aug[i][m + i] = 1;
    }
    // Reduce only on the phi^T columns, keeping the transform rows intact.
    IntMatrix h = hermite_normal_form(std::move(aug));
    if (h.size() < m)
        return std::nullopt;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (h[i][j] != (i == j ? 1 : 0))
                return std::nullopt;
    IntMatrix r(ncols, IntVector(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < ncols; ++k)
            r[k][i] = h[i][m + k];
    return r;
}

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
    if (a.empty())
        return {};
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b.front().size();
    IntMatrix out(a.size(), IntVector(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j)
                    out[i][j] += a[i][k] * b[k][j];
    return out;
}

RatVector apply(const IntMatrix &a, std::span<const Rational> v) {
    RatVector out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += Rational(a[i][j]) * v[j];
    return out;
}

} // namespace amoeba
