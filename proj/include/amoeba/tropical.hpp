#pragma once

#include <utility>
#include <vector>

#include "amoeba/laurent.hpp"
#include "amoeba/polyhedral.hpp"

namespace amoeba {

// Kernels below have a serial reference path and an OpenMP path; both return
// identical, canonically ordered results.
enum class Execution { Serial, Parallel };

/// Exponents u_i with heights c_i = nu_p(a_i) (all zero at Generic).
struct TropicalData {
    std::size_t rank = 0;
    std::vector<Exponent> exponents;
    std::vector<Rational> heights;
};

/// ArchimedeanNotSupported at the archimedean place; PlaceFieldMismatch if the
/// place does not belong to f's field.
TropicalData tropical_data(const LaurentPoly &f, const Place &p);

struct PsiValue {
    Rational value;
    TieSet argmin;
};

/// Psi(v) = min_i <u_i, v> + c_i with every index attaining it.
PsiValue psi(const TropicalData &data, std::span<const Rational> v);
PsiValue psi(const LaurentPoly &f, const Place &p, std::span<const Rational> v);

/// Corner locus of Psi: the (n-1)-dimensional cells, one per tie set, with
/// multiplicity the lattice length of the dual edge. MonomialInput for s = 1.
PolyhedralComplex trop_hypersurface(const TropicalData &data, Execution exec = Execution::Parallel);
PolyhedralComplex trop_hypersurface(const LaurentPoly &f, const Place &p,
                                    Execution exec = Execution::Parallel);
PolyhedralComplex generic_skeleton(const LaurentPoly &f, Execution exec = Execution::Parallel);

bool contains_zero(const PolyhedralComplex &c);

/// Cellwise image under a surjective integer matrix; cells contained in
/// another image cell are dropped.
PolyhedralComplex project_complex(const PolyhedralComplex &c, const IntMatrix &phi);

/// f(x^{psi}) for x in the n-torus: f lives on an m-torus and `map` is m x n.
struct PullbackConstraint {
    LaurentPoly f;
    IntMatrix map;
};

PullbackConstraint identity_pullback(const LaurentPoly &f);

/// Intersection of the pulled-back tropical hypersurfaces, inclusion-maximal
/// cells only. Q constraints are promoted when the system also has Q(z) ones.
PolyhedralComplex prevariety(const std::vector<PullbackConstraint> &system, const Place &p,
                             Execution exec = Execution::Parallel);

/// Common field and ambient rank of a system; DimensionMismatch on
/// inconsistent maps, MonomialInput on monomial constraints.
std::pair<Field, std::size_t> system_shape(const std::vector<PullbackConstraint> &system);
/// Union of bad places over the constraints of a system.
std::vector<Place> system_bad_places(const std::vector<PullbackConstraint> &system);

/// Generic complex plus the complexes at finitely many special places. The
/// constraints are kept so archimedean queries can be made on demand.
struct AdelicAmoeba {
    std::size_t rank = 0;
    Field field = Field::Q;
    PolyhedralComplex generic;
    std::vector<std::pair<Place, PolyhedralComplex>> special;
    std::vector<PullbackConstraint> constraints;

    bool is_hypersurface() const;
    // Complex at p: the special one if p is special, the generic one otherwise.
    const PolyhedralComplex &at(const Place &p) const;
};

AdelicAmoeba adelic_amoeba(const LaurentPoly &f, Execution exec = Execution::Parallel);
AdelicAmoeba adelic_amoeba(const std::vector<PullbackConstraint> &system,
                           Execution exec = Execution::Parallel);

} // namespace amoeba
