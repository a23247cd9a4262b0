#include "amoeba/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <mpfr.h>

namespace amoeba {

namespace {

struct Mpfr {
    mpfr_t x;
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    ~Mpfr() { mpfr_clear(x); }
    Mpfr(const Mpfr &) = delete;
    Mpfr &operator=(const Mpfr &) = delete;
};

void require_rational(const LaurentPoly &f, std::span<const Rational> v) {
    if (f.field() != Field::Q)
        throw Error(ErrorCode::PlaceFieldMismatch, "the archimedean place is only defined for Q");
    if (v.size() != f.rank())
        throw Error(ErrorCode::DimensionMismatch, "point length does not match rank");
}

Rational pairing(const Exponent &u, std::span<const Rational> v) {
    Rational s = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0)
            s += Rational(static_cast<long>(u[k])) * v[k];
    return s;
}

// Sign of r_k - sum_{j != k} r_j.
std::optional<int> dominance_sign(const LaurentPoly &f, std::span<const Rational> v, std::size_t k) {
    std::vector<std::pair<Rational, Rational>> terms;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Rational weight = abs(f.term(i).coefficient.rational());
        terms.emplace_back(i == k ? weight : Rational(-weight), -pairing(f.term(i).exponent, v));
    }
    return exp_sum_sign(std::move(terms));
}

} // namespace

std::optional<int> exp_sum_sign(std::vector<std::pair<Rational, Rational>> terms) {
    std::map<Rational, Rational> merged;
    for (auto &[beta, y] : terms)
        merged[y] += beta;
    std::erase_if(merged, [](const auto &kv) { return kv.second == 0; });
    if (merged.empty())
        return 0;
    if (merged.size() == 1)
        return sgn(merged.begin()->second);
    for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
        Mpfr lo(prec), hi(prec), ylo(prec), yhi(prec), elo(prec), ehi(prec), tlo(prec), thi(prec);
        mpfr_set_zero(lo.x, 1);
        mpfr_set_zero(hi.x, 1);
        for (const auto &[y, beta] : merged) {
            mpfr_set_q(ylo.x, y.get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(yhi.x, y.get_mpq_t(), MPFR_RNDU);
            mpfr_exp(elo.x, ylo.x, MPFR_RNDD);
            mpfr_exp(ehi.x, yhi.x, MPFR_RNDU);
            if (beta > 0) {
                mpfr_mul_q(tlo.x, elo.x, beta.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(thi.x, ehi.x, beta.get_mpq_t(), MPFR_RNDU);
            } else {
                mpfr_mul_q(tlo.x, ehi.x, beta.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(thi.x, elo.x, beta.get_mpq_t(), MPFR_RNDU);
            }
            mpfr_add(lo.x, lo.x, tlo.x, MPFR_RNDD);
            mpfr_add(hi.x, hi.x, thi.x, MPFR_RNDU);
        }
        if (mpfr_sgn(lo.x) > 0)
            return 1;
        if (mpfr_sgn(hi.x) < 0)
            return -1;
    }
    return std::nullopt;
}

std::vector<double> log_moduli(const LaurentPoly &f, std::span<const Rational> v) {
    require_rational(f, v);
    std::vector<double> out;
    for (const auto &t : f.terms())
        out.push_back(-log_abs(t.coefficient, Place::archimedean()) - pairing(t.exponent, v).get_d());
    return out;
}

std::optional<std::size_t> lopsided_term(const LaurentPoly &f, std::span<const Rational> v) {
    require_rational(f, v);
    auto logs = log_moduli(f, v);
    // Only the largest moduli can dominate.
    double top = *std::max_element(logs.begin(), logs.end());
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (logs[k] < top - 1e-9 * (1 + std::abs(top)))
            continue;
        if (dominance_sign(f, v, k) == 1)
            return k;
    }
    return std::nullopt;
}

bool lopsided_outside(const LaurentPoly &f, std::span<const Rational> v) {
    return lopsided_term(f, v).has_value();
}

std::string_view verdict_name(ArchVerdict verdict) {
    switch (verdict) {
    case ArchVerdict::Inside:
        return "inside";
    case ArchVerdict::Outside:
        return "outside";
    case ArchVerdict::NotApplicable:
        return "not_applicable";
    case ArchVerdict::Unknown:
        return "unknown";
    }
    return "unknown";
}

ArchResult triangle_exact_membership(const LaurentPoly &f, std::span<const Rational> v) {
    if (f.size() != 3)
        throw Error(ErrorCode::TermCountMismatch,
                    "triangle test needs 3 terms, got " + std::to_string(f.size()));
    require_rational(f, v);
    ArchResult result;
    result.method = "triangle";
    IntMatrix diffs(2, IntVector(f.rank()));
    for (std::size_t k = 0; k < f.rank(); ++k) {
        diffs[0][k] = static_cast<long>(f.term(0).exponent[k] - f.term(2).exponent[k]);
        diffs[1][k] = static_cast<long>(f.term(1).exponent[k] - f.term(2).exponent[k]);
    }
    if (!extends_to_basis(diffs, f.rank())) {
        result.verdict = ArchVerdict::NotApplicable;
        return result;
    }
    bool decided = true;
    for (std::size_t k = 0; k < 3; ++k) {
        auto sign = dominance_sign(f, v, k);
        if (!sign) {
            decided = false;
        } else if (*sign > 0) {
            result.verdict = ArchVerdict::Outside;
            result.dominant = k;
            return result;
        }
    }
    result.verdict = decided ? ArchVerdict::Inside : ArchVerdict::NotApplicable;
    return result;
}

namespace {

using Cld = std::complex<long double>;

// f restricted to fixed phases of every coordinate except `solved`, in the
// variable w = x_solved / exp(-v_solved), scaled so the largest modulus is 1.
class SliceSearch {
  public:
    SliceSearch(const LaurentPoly &f, std::span<const Rational> v, double tol)
        : f_(f), tol_(tol), logs_(log_moduli(f, v)) {
        const std::size_t n = f.rank();
        std::int64_t best_spread = -1;
        for (std::size_t k = 0; k < n; ++k) {
            auto [lo, hi] = exponent_range(k);
            if (hi - lo > best_spread) {
                best_spread = hi - lo;
                solved_ = k;
            }
        }
        std::tie(low_, std::ignore) = exponent_range(solved_);
        degree_ = static_cast<std::size_t>(best_spread);
        double top = *std::max_element(logs_.begin(), logs_.end());
        for (std::size_t i = 0; i < f.size(); ++i) {
            weights_.push_back(std::exp(logs_[i] - top));
            signs_.push_back(sgn(f.term(i).coefficient.rational()));
        }
        for (std::size_t k = 0; k < n; ++k)
            moduli_.push_back(std::exp(-v[k].get_d()));
    }

    std::size_t free_dims() const { return f_.rank() - 1; }

    struct Eval {
        bool degenerate = true;
        std::vector<Cld> roots;
        int inside = 0;
        double distance = INFINITY; // min |log|w|| over roots
    };

    Eval evaluate(const std::vector<double> &phases) const {
        std::vector<Cld> coeffs(degree_ + 1, Cld(0));
        for (std::size_t i = 0; i < f_.size(); ++i) {
            long double angle = phase_of(i, phases);
            auto e = static_cast<std::size_t>(f_.term(i).exponent[solved_] - low_);
            coeffs[e] += std::polar(static_cast<long double>(weights_[i]), angle + sign_phase(i));
        }
        long double scale = 0;
        for (const auto &c : coeffs)
            scale = std::max(scale, std::abs(c));
        std::size_t deg = degree_;
        while (deg > 0 && std::abs(coeffs[deg]) <= 1e-13L * scale)
            --deg;
        Eval out;
        if (deg == 0)
            return out;
        out.degenerate = false;
        coeffs.resize(deg + 1);
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<long>(deg), static_cast<long>(deg));
        for (std::size_t r = 1; r < deg; ++r)
            companion(static_cast<long>(r), static_cast<long>(r - 1)) = 1.0;
        for (std::size_t r = 0; r < deg; ++r) {
            Cld c = -coeffs[r] / coeffs[deg];
            companion(static_cast<long>(r), static_cast<long>(deg - 1)) =
                std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()));
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        for (long r = 0; r < solver.eigenvalues().size(); ++r) {
            Cld w(solver.eigenvalues()[r].real(), solver.eigenvalues()[r].imag());
            w = polish(coeffs, w);
            double d = static_cast<double>(std::abs(std::log(std::abs(w))));
            if (std::abs(w) < 1)
                ++out.inside;
            out.distance = std::min(out.distance, d);
            out.roots.push_back(w);
        }
        return out;
    }

    // Witness from the root closest to the unit circle, if it passes both checks.
    std::optional<ArchResult> accept(const std::vector<double> &phases, const Eval &eval) const {
        if (eval.degenerate)
            return std::nullopt;
        auto best = std::min_element(eval.roots.begin(), eval.roots.end(), [](const Cld &a, const Cld &b) {
            return std::abs(std::log(std::abs(a))) < std::abs(std::log(std::abs(b)));
        });
        Cld w = *best;
        if (std::abs(std::abs(w) - 1.0L) > tol_)
            return std::nullopt;
        // Residual on the circle point w/|w|, relative to sum of moduli.
        Cld on_circle = w / std::abs(w);
        Cld value = 0;
        long double total = 0;
        for (std::size_t i = 0; i < f_.size(); ++i) {
            long double angle = phase_of(i, phases) +
                                static_cast<long double>(f_.term(i).exponent[solved_]) * std::arg(on_circle);
            value += std::polar(static_cast<long double>(weights_[i]), angle + sign_phase(i));
            total += weights_[i];
        }
        double residual = static_cast<double>(std::abs(value) / total);
        if (!(residual < tol_))
            return std::nullopt;
        ArchResult r;
        r.verdict = ArchVerdict::Inside;
        r.method = "sampled";
        r.residual = residual;
        std::size_t slot = 0;
        for (std::size_t k = 0; k < f_.rank(); ++k) {
            double angle = k == solved_ ? static_cast<double>(std::arg(w)) : phases[slot++];
            double modulus = k == solved_ ? moduli_[k] * static_cast<double>(std::abs(w)) : moduli_[k];
            r.witness.push_back(std::polar(modulus, angle));
        }
        return r;
    }

  private:
    std::pair<std::int64_t, std::int64_t> exponent_range(std::size_t k) const {
        std::int64_t lo = f_.term(0).exponent[k], hi = lo;
        for (const auto &t : f_.terms()) {
            lo = std::min(lo, t.exponent[k]);
            hi = std::max(hi, t.exponent[k]);
        }
        return {lo, hi};
    }

    long double phase_of(std::size_t i, const std::vector<double> &phases) const {
        long double angle = 0;
        std::size_t slot = 0;
        for (std::size_t k = 0; k < f_.rank(); ++k) {
            if (k == solved_)
                continue;
            angle += static_cast<long double>(f_.term(i).exponent[k]) * phases[slot++];
        }
        return angle;
    }

    long double sign_phase(std::size_t i) const {
        return signs_[i] < 0 ? std::numbers::pi_v<long double> : 0.0L;
    }

    static Cld polish(const std::vector<Cld> &coeffs, Cld w) {
        for (int it = 0; it < 4; ++it) {
            Cld p = 0, dp = 0;
            for (std::size_t e = coeffs.size(); e-- > 0;) {
                dp = dp * w + p;
                p = p * w + coeffs[e];
            }
            if (std::abs(dp) == 0)
                break;
            Cld next = w - p / dp;
            if (!std::isfinite(next.real()) || !std::isfinite(next.imag()))
                break;
            w = next;
        }
        return w;
    }

    const LaurentPoly &f_;
    double tol_;
    std::vector<double> logs_;
    std::vector<double> weights_;
    std::vector<int> signs_;
    std::vector<double> moduli_;
    std::size_t solved_ = 0;
    std::int64_t low_ = 0;
    std::size_t degree_ = 0;
};

} // namespace

ArchResult sampled_inside(const LaurentPoly &f, std::span<const Rational> v, const SampleOptions &options) {
    require_rational(f, v);
    require_hypersurface(f);
    if (options.trials < 1 || !(options.tol > 0))
        throw Error(ErrorCode::InvalidArgument, "sampling needs trials >= 1 and tol > 0");
    SliceSearch search(f, v, options.tol);
    const std::size_t dims = search.free_dims();
    bool any_slice = false;
    std::optional<ArchResult> found;

    auto probe = [&](const std::vector<double> &phases) {
        auto eval = search.evaluate(phases);
        any_slice |= !eval.degenerate;
        if (!found)
            found = search.accept(phases, eval);
        return eval;
    };

    // Real phase patterns first: boundary points of amoebas of real
    // polynomials often sit there.
    if (dims <= 6) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << dims) && !found; ++mask) {
            std::vector<double> phases(dims);
            for (std::size_t k = 0; k < dims; ++k)
                phases[k] = (mask >> k) & 1 ? std::numbers::pi : 0.0;
            probe(phases);
        }
    }
    if (found)
        return *found;
    if (dims == 0) {
        if (!any_slice)
            throw Error(ErrorCode::DegenerateSlice, "polynomial is constant in the solved coordinate");
        return ArchResult{ArchVerdict::Unknown, "sampled", {}, {}, 0};
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::vector<std::pair<double, std::vector<double>>> best;
    std::optional<std::pair<int, std::vector<double>>> reference;
    for (int trial = 0; trial < options.trials && !found; ++trial) {
        std::vector<double> phases(dims);
        for (auto &p : phases)
            p = angle(rng);
        auto eval = probe(phases);
        if (found || eval.degenerate)
            continue;
        best.emplace_back(eval.distance, phases);
        if (!reference) {
            reference.emplace(eval.inside, phases);
            continue;
        }
        if (eval.inside == reference->first)
            continue;
        // A root crosses the unit circle between the two phase vectors.
        std::vector<double> a = reference->second, b = phases;
        int count_a = reference->first;
        for (int it = 0; it < 200 && !found; ++it) {
            std::vector<double> mid(dims);
            for (std::size_t k = 0; k < dims; ++k)
                mid[k] = 0.5 * (a[k] + b[k]);
            auto m = probe(mid);
            if (m.inside == count_a)
                a = mid;
            else
                b = mid;
        }
        if (!found)
            probe(a), probe(b);
    }
    if (found)
        return *found;

    // Local pattern search from the closest slices.
    std::sort(best.begin(), best.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    best.resize(std::min<std::size_t>(best.size(), 4));
    for (auto &[distance, phases] : best) {
        for (double step = 0.5; step > 1e-13 && !found; step *= 0.5) {
            bool improved = true;
            while (improved && !found) {
                improved = false;
                for (std::size_t k = 0; k < dims && !found; ++k) {
                    for (double sign : {1.0, -1.0}) {
                        std::vector<double> trial = phases;
                        trial[k] += sign * step;
                        auto eval = probe(trial);
                        if (!eval.degenerate && eval.distance < distance) {
                            distance = eval.distance;
                            phases = trial;
                            improved = true;
                            break;
                        }
                    }
                }
            }
        }
        if (found)
            break;
    }
    if (found)
        return *found;
    if (!any_slice)
        throw Error(ErrorCode::DegenerateSlice, "every sampled slice was constant in the solved coordinate");
    return ArchResult{ArchVerdict::Unknown, "sampled", {}, {}, 0};
}

double escape_bound(const LaurentPoly &f, std::size_t i, std::span<const Rational> v) {
    require_rational(f, v);
    if (i >= f.size())
        throw Error(ErrorCode::InvalidArgument, "term index out of range");
    const Rational base = pairing(f.term(i).exponent, v);
    const double spread = std::log(static_cast<double>(f.size() - 1));
    const double log_ai = -log_abs(f.term(i).coefficient, Place::archimedean());
    double bound = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (j == i)
            continue;
        Rational delta = pairing(f.term(j).exponent, v) - base;
        if (delta <= 0)
            throw Error(ErrorCode::InvalidArgument, "direction is not strictly inside the cone of term " +
                                                        std::to_string(i));
        double log_aj = -log_abs(f.term(j).coefficient, Place::archimedean());
        bound = std::max(bound, (spread + log_aj - log_ai) / delta.get_d());
    }
    return bound;
}

} // namespace amoeba
