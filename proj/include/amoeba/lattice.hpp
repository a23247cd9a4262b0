#pragma once

#include <optional>
#include <span>
#include <vector>

#include "amoeba/scalars.hpp"

namespace amoeba {

using IntVector = std::vector<Integer>;
// Row-major integer matrix; every row has the same length.
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;

IntMatrix identity_matrix(std::size_t n);
IntVector to_int_vector(std::span<const std::int64_t> v);
RatVector to_rat_vector(std::span<const Integer> v);

// Rank over Q.
std::size_t rank(const std::vector<RatVector> &rows);
std::size_t rank(const IntMatrix &rows);

// Scale a rational vector by a positive factor to a primitive integer vector
// (zero stays zero).
IntVector primitive_integer(std::span<const Rational> v);
IntVector primitive_integer(std::span<const Integer> v);

/// Row-style Hermite normal form of the lattice spanned by the rows: pivots
/// positive, entries above each pivot reduced into [0, pivot). Zero rows are
/// dropped, so the result is a canonical basis of the row lattice.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Basis (as rows, in Hermite form) of { x in Z^n : A x = 0 }.
IntMatrix integer_kernel(const IntMatrix &a, std::size_t ncols);

/// Basis of span_Q(rows) intersected with Z^n.
IntMatrix saturate(const IntMatrix &rows, std::size_t ncols);

/// True iff the rows are independent and extend to a basis of Z^n
/// (all Smith invariant factors equal 1).
bool extends_to_basis(const IntMatrix &rows, std::size_t ncols);

/// R with phi R = I over the integers, if one exists.
std::optional<IntMatrix> integer_right_inverse(const IntMatrix &phi, std::size_t ncols);

IntMatrix multiply(const IntMatrix &a, const IntMatrix &b);
RatVector apply(const IntMatrix &a, std::span<const Rational> v);

} // namespace amoeba
