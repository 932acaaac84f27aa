#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "srpb/quotient/ring.hpp"
#include "srpb/simplicial.hpp"

namespace srpb {

/// Cartesian square of Stanley-Reisner rings
///
///     A  --i1-->  A1
///     |           |
///     i2          j1
///     v           v
///     A2 --j2-->  A0
///
/// with A = A(Σ), A1 = A(Σ₁), A2 = A(C(Σ₂)) = A0[X_apex], A0 = A(Σ₂), all over
/// the same ambient variables. j2 kills X_apex and `section` includes A0 back into A2
/// (X_apex, already zero in A0, goes to 0).
struct FiberSquare {
    SimplicialComplex sigma;
    SimplicialComplex sigma1;
    SimplicialComplex sigma2;
    std::size_t apex;
    QuotientRing A;
    QuotientRing A1;
    QuotientRing A2;
    QuotientRing A0;
    RingHom i1;
    RingHom i2;
    RingHom j1;
    RingHom j2;
    RingHom section;
};

/// Throws PreconditionError if Σ is a simplex. All five maps are hom-checked and
/// the commutativity and section laws verified (InternalError otherwise).
FiberSquare build_vorst_square(ContextPtr ctx, const SimplicialComplex& sigma);
FiberSquare build_vorst_square(Field field, const SimplicialComplex& sigma);

/// j1∘i1 = j2∘i2 on every variable.
bool square_commutes(const FiberSquare& square);
/// j2∘section = id on every variable of A0.
bool section_splits(const FiberSquare& square);

struct FiberReport {
    bool ok = true;
    std::size_t degree = 0;
    std::size_t basis_a = 0;
    std::size_t basis_a1 = 0;
    std::size_t basis_a2 = 0;
    std::size_t basis_a0 = 0;
    std::optional<std::string> failure;
};

/// Checks, for every monomial of total degree ≤ degree, that it survives in A iff
/// it survives in A1 or A2, and survives in both iff it survives in A0; hence
/// |B(A)| = |B(A1)| + |B(A2)| - |B(A0)| in each degree.
FiberReport fiber_check(const FiberSquare& square, std::size_t degree = 4);

/// The unique a ∈ A with i1(a) = a1 and i2(a) = a2, for j1(a1) = j2(a2).
/// Throws InternalError if the pair is incompatible or the glue does not restrict back.
Polynomial glue(const FiberSquare& square, const Polynomial& a1, const Polynomial& a2);
PolyMatrix glue(const FiberSquare& square, const PolyMatrix& m1, const PolyMatrix& m2);

} // namespace srpb
