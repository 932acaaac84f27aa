#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "srpb/quotient/ring.hpp"
#include "srpb/quotient/square.hpp"
#include "srpb/quotient/units.hpp"

namespace srpb {

/// The image of an idempotent matrix E over a quotient ring.
class ProjModule {
public:
    /// E is brought to normal form; PreconditionError unless nf(E² - E) = 0.
    ProjModule(QuotientRing ring, PolyMatrix e);

    static ProjModule free(const QuotientRing& ring, std::size_t rank);

    const QuotientRing& ring() const { return ring_; }
    const PolyMatrix& idempotent() const { return e_; }
    std::size_t size() const { return e_.rows(); }

    friend bool operator==(const ProjModule& a, const ProjModule& b)
    {
        return a.ring_ == b.ring_ && a.e_ == b.e_;
    }

private:
    QuotientRing ring_;
    PolyMatrix e_;
};

/// Trace of E at the augmentation; RankUndefinedError unless it is an integer in [0, size].
std::size_t rank(const ProjModule& p);

/// E' = nf(h(E)); h must be verified and start at P's ring.
ProjModule base_change(const ProjModule& p, const RingHom& h);

/// Φ: source -> target and Ψ back, as matrices acting on columns:
/// Φ = E_t·Φ·E_s, Ψ = E_s·Ψ·E_t, Ψ·Φ = E_s, Φ·Ψ = E_t.
struct ModIso {
    ProjModule source;
    ProjModule target;
    PolyMatrix forward;
    PolyMatrix backward;
};

/// Checks all four laws (and shapes, rings).
bool iso_holds(const ModIso& iso);
/// Throws InternalError naming `what` if the laws fail.
const ModIso& assert_iso(const ModIso& iso, const char* what);

ModIso identity_iso(const ProjModule& p);
ModIso inverse(const ModIso& iso);
/// g ∘ f, requiring f.target == g.source.
ModIso compose(const ModIso& g, const ModIso& f);
ModIso base_change(const ModIso& iso, const RingHom& h);

/// v with certificate w, nf(v·wᵀ) = 1.
struct UmRow {
    QuotientRing ring;
    PolyMatrix v;
    PolyMatrix w;
};

bool um_holds(const UmRow& u);
/// Finds the certificate through the Gröbner engine; nullopt when v is not unimodular.
std::optional<UmRow> make_um_row(const QuotientRing& ring, const PolyMatrix& v);

/// E = I - wᵀ·v, so that v·E = 0 and rank E = r - 1.
ProjModule kernel_module(const UmRow& u);

/// A unimodular element p of im E with a functional f: E·p = p, f·E = f, f·p = 1.
struct UmElement {
    ProjModule module;
    PolyMatrix element;    // column
    PolyMatrix functional; // row
};

bool um_element_holds(const UmElement& u);

/// Module over A glued from I_r ⊕ 0 over A1 and U·(I_r ⊕ 0)·U⁻¹ over A2, where
/// U is the Whitehead lift of σ ∈ GL_r(A0). Size 2r, rank r.
ProjModule milnor_patch(const FiberSquare& square, const Invertible& sigma);

/// Lifts an automorphism of a module over A0 to one of `over` (a module over A2).
using AutLifter = std::function<ModIso(const ModIso& alpha0, const ProjModule& over)>;
/// Lifts a unimodular element over A0 to one of `over` (a module over A2).
using UmLifter = std::function<UmElement(const UmElement& u0, const ProjModule& over)>;

/// Applies the section entrywise: valid when `over` is itself the section image of α0's module.
AutLifter section_aut_lifter(const FiberSquare& square);
UmLifter section_um_lifter(const FiberSquare& square);

/// Automorphism of P restricting to α1 over A1 and to lifter(j1(α1)) over A2.
/// LifterContractError if the lifter's output is not an automorphism reducing to j1(α1).
ModIso pair_aut(const FiberSquare& square, const ProjModule& p, const ModIso& alpha1, const AutLifter& lifter);

/// Intermediate data of glue_iso: the mismatch α0 over A0, its lift β over A2
/// (absent when α0 is the identity) and the corrected isomorphism over A2.
struct GlueTrace {
    ModIso alpha0;
    std::optional<ModIso> beta;
    ModIso phi2;
};

/// Iso P ≅ Q over A from φ1: P1 ≅ Q1 and φ2: P2 ≅ Q2 (Pi, Qi the base changes
/// along i1, i2). The mismatch α0 = j2(φ2)·j1(φ1)⁻¹ ∈ Aut(Q0) is lifted to β ∈ Aut(Q2)
/// and φ2 replaced by β⁻¹·φ2 before gluing.
ModIso glue_iso(const FiberSquare& square, const ProjModule& p, const ProjModule& q, const ModIso& phi1,
                const ModIso& phi2, const AutLifter& lifter, GlueTrace* trace = nullptr);

/// Unimodular element of P restricting to u1 over A1 and lifter(j1(u1)) over A2.
UmElement pair_um(const FiberSquare& square, const ProjModule& p, const UmElement& u1, const UmLifter& lifter);

} // namespace srpb
