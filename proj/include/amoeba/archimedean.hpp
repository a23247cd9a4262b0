#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amoeba/laurent.hpp"
#include "amoeba/lattice.hpp"

namespace amoeba {

// Archimedean queries take f over Q and a rational log-modulus point v; the
// moduli are r_i = |a_i| exp(-<u_i, v>). Q(z) input is rejected with
// PlaceFieldMismatch.

/// Sign of sum_k beta_k exp(y_k) for rational beta, y. Equal exponents are
/// merged first, so a zero sum is detected exactly; otherwise the sign comes
/// from MPFR interval enclosures at increasing precision. nullopt if the
/// precision cap is reached.
std::optional<int> exp_sum_sign(std::vector<std::pair<Rational, Rational>> terms);

std::vector<double> log_moduli(const LaurentPoly &f, std::span<const Rational> v);

/// Index k with r_k > sum_{j != k} r_j, decided exactly.
std::optional<std::size_t> lopsided_term(const LaurentPoly &f, std::span<const Rational> v);
bool lopsided_outside(const LaurentPoly &f, std::span<const Rational> v);

enum class ArchVerdict { Inside, Outside, NotApplicable, Unknown };
std::string_view verdict_name(ArchVerdict verdict);

struct ArchResult {
    ArchVerdict verdict = ArchVerdict::Unknown;
    std::string method;                      // "triangle", "lopsided", "sampled"
    std::optional<std::size_t> dominant;     // lopsided term index
    std::vector<std::complex<double>> witness; // point of V(f) with the prescribed moduli
    double residual = 0;                     // |f(witness)| / sum r_i
};

/// Exact membership for trinomials whose exponent differences extend to a
/// lattice basis: Inside iff max r_i <= sum of the other two.
/// TermCountMismatch unless f has three terms.
ArchResult triangle_exact_membership(const LaurentPoly &f, std::span<const Rational> v);

struct SampleOptions {
    int trials = 200;
    double tol = 1e-9;
    std::uint64_t seed = 0;
};

/// Searches phases of all but one coordinate for a point of V(f) whose solved
/// coordinate has modulus exp(-v_j). Inside with a witness, or Unknown.
/// DegenerateSlice if no sampled slice has positive degree.
ArchResult sampled_inside(const LaurentPoly &f, std::span<const Rational> v,
                          const SampleOptions &options = {});

/// For v with <u_i, v> < <u_j, v> for all j != i: a c0 >= 0 such that term i
/// is lopsided at c v for every c > c0. InvalidArgument if v is not strictly
/// inside the cone of term i.
double escape_bound(const LaurentPoly &f, std::size_t i, std::span<const Rational> v);

} // namespace amoeba
