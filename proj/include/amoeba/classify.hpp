#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amoeba/archimedean.hpp"
#include "amoeba/tropical.hpp"

namespace amoeba {

/// Open halfspace span(boundary) + R_{>0} direction.
struct Halfspace {
    IntMatrix boundary;
    IntVector direction;

    std::size_t rank() const { return direction.size(); }
};

/// Validates lengths, drops dependent boundary generators, and rejects a
/// direction inside the boundary span (DependentDirection).
Halfspace make_halfspace(IntMatrix boundary, IntVector direction);

/// phi: Z^n -> Z^{n-k} with kernel the saturation of the boundary span, plus
/// an integer right inverse.
struct QuotientMap {
    IntMatrix phi;
    IntMatrix right_inverse;
};

QuotientMap quotient_map(const Halfspace &h);

enum class HalflineVerdict { Disjoint, Meets, NotRelint };
std::string_view halfline_verdict_name(HalflineVerdict verdict);

struct HalflineResult {
    HalflineVerdict verdict = HalflineVerdict::NotRelint;
    std::optional<std::size_t> vertex; // the unique minimizer of <u_i, v>
    RatVector witness;                 // c v on the tropical hypersurface (Meets)
};

/// Valuation criterion for the half line R_{>0} v against the tropical
/// hypersurface at p, valid when v is in the open cone of a single term.
HalflineResult halfline_disjoint_fast(const LaurentPoly &f, const Place &p, const IntVector &v);

struct MeetResult {
    bool meets = false;
    std::optional<std::size_t> cell;
    RatVector witness; // point of H in the cell
};

MeetResult halfspace_meets_polyhedron(const Halfspace &h, const Polyhedron &p);
MeetResult halfspace_meets_complex(const Halfspace &h, const PolyhedralComplex &c,
                                   Execution exec = Execution::Parallel);

struct ArchScanOptions {
    int points = 20;
    Rational t_max = 4;
    SampleOptions sampling;
};

struct ArchPoint {
    RatVector point;
    bool grid = true; // false for the extra near/far probes
    // Outside: certified by an exact test. Inside: a point of the amoeba.
    ArchVerdict verdict = ArchVerdict::Unknown;
    std::string method;
    std::optional<std::size_t> constraint;
    std::optional<std::size_t> dominant;
    std::vector<std::complex<double>> witness;
};

enum class ArchStatus { CertifiedDisjoint, Meets, EvidenceOnly, NotApplicable };
std::string_view arch_status_name(ArchStatus status);

struct PlaceReport {
    Place place = Place::generic();
    MeetResult result;
};

struct AdelicReport {
    PlaceReport generic;
    std::vector<PlaceReport> special;
    bool nonarchimedean_disjoint = true;
    ArchStatus archimedean = ArchStatus::NotApplicable;
    std::vector<ArchPoint> arch_points;
    // Two scanned points lopsided for different terms lie in different
    // complement components, so the segment between them meets the amoeba.
    std::optional<std::pair<std::size_t, std::size_t>> component_crossing;
    bool disjoint = true;
};

AdelicReport adelic_disjoint(const AdelicAmoeba &amoeba, const Halfspace &h,
                             const ArchScanOptions &options = {},
                             Execution exec = Execution::Parallel);

/// Smallest i with every a_j / a_i a constant; FieldMismatch for Q input.
std::optional<std::size_t> defined_over_k_test(const LaurentPoly &f);

/// Every coordinate is +-1. ZeroCoordinate on a zero entry.
bool torsion_point_test(const std::vector<Rational> &x);

struct TorsionCosetResult {
    bool torsion_coset = false;
    std::optional<Constraint> hyperplane; // <u - w, v> = 0
};

/// Binomial a x^u + b x^w with -b/a = +-1. FieldMismatch for Q(z) input.
TorsionCosetResult torsion_coset_test(const LaurentPoly &f);

/// f = c x^u g(x^w) with w primitive and every root of g a root of unity, so
/// V(f) is a finite union of torsion translates of the subtorus {x^w = 1}.
/// Returns w. Covers cyclotomic ratios that the binomial test cannot see.
/// FieldMismatch for Q(z) input.
std::optional<IntVector> cyclotomic_coset_test(const LaurentPoly &f);

/// X given as a hypersurface or a system, and optionally the image X' under
/// the quotient by the boundary of H (a hypersurface in quotient
/// coordinates, or the declaration that X' has codimension > 1).
struct Presentation {
    std::vector<PullbackConstraint> system;
    std::optional<LaurentPoly> image;
    bool codim_gt_one = false;
};

enum class Theorem1Status { Meets, Disjoint, Violation };
std::string_view theorem1_status_name(Theorem1Status status);

struct Theorem1Report {
    AdelicReport hypothesis;
    QuotientMap quotient;
    Theorem1Status status = Theorem1Status::Meets;
    std::optional<int> conclusion_case;
    std::vector<std::string> certificates;
    bool archimedean_caveat = false;
};

/// MissingImagePresentation if H has a nonempty boundary and neither an image
/// nor the codimension declaration is given.
Theorem1Report theorem1_report(const Presentation &x, const Halfspace &h,
                               const ArchScanOptions &options = {},
                               Execution exec = Execution::Parallel);

/// Per Newton vertex: the place-uniform minimality test and a strictly
/// interior direction of its cone with the first amoeba it meets.
struct VertexCone {
    std::size_t vertex = 0;
    IntVector direction;
    bool uniform_minimal = false;
    std::optional<Place> meets_at; // first nonarchimedean complex met
    // Scan of the half line at the archimedean place (over Q, when no
    // nonarchimedean complex is met).
    ArchStatus archimedean = ArchStatus::NotApplicable;

    bool disjoint() const { return !meets_at && archimedean != ArchStatus::Meets; }
};

std::vector<VertexCone> vertex_cone_search(const AdelicAmoeba &amoeba, const LaurentPoly &f,
                                           Execution exec = Execution::Parallel);

struct EklReport {
    std::vector<VertexCone> cones;
    std::optional<std::size_t> disjoint_vertex;
    bool all_contain_zero = false;
    std::vector<std::pair<Place, bool>> zero_by_place;
    bool consistent = false;
};

EklReport ekl_consistency_check(const LaurentPoly &f, Execution exec = Execution::Parallel);

} // namespace amoeba
