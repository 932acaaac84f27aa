#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srpb/engines/certificate.hpp"
#include "srpb/projmod.hpp"
#include "srpb/quotient/units.hpp"

namespace srpb {

enum class ObligationKind { extend, stable_extend, cancel };

std::string to_string(ObligationKind kind);

/// An unresolved base case: a module over a polynomial ring (an ideal of variables only).
struct Obligation {
    ObligationKind kind;
    QuotientRing ring;
    ProjModule module;
    std::string detail;
};

/// What an oracle says about a module P over a polynomial ring: an isomorphism
/// P ≅ P(0) (the constant idempotent E(0) over the same ring), or a failure.
struct OracleAnswer {
    std::optional<ModIso> iso;
    std::string detail;
    ObligationKind kind = ObligationKind::extend;
};

using ExtendOracle = std::function<OracleAnswer(const ProjModule& p)>;
/// Contract: called only on P with P ⊕ (free rank 1) extended.
using StableOracle = std::function<OracleAnswer(const ProjModule& p)>;

/// Never succeeds; useful to expose every base case as an obligation.
OracleAnswer no_oracle(const ProjModule& p);

/// Built-in base cases: constant E (identity) and polynomial rings in one variable
/// (Smith normal form). Failure otherwise.
OracleAnswer builtin_oracle(const ProjModule& p);

/// Constant modules pass through as identities; the rest go to `base`, with
/// failures reported as stable-extend obligations.
ExtendOracle stable_adapter(StableOracle base);

/// Iso between constant modules of equal rank over a field, given as matrices over `ring`.
std::optional<ModIso> constant_iso(const ProjModule& p, const ProjModule& q);

/// Advisory record of the characteristic/rank hypotheses; never enforced.
struct HypothesisProfile {
    unsigned long characteristic = 0;
    std::size_t rank = 0;
    std::size_t dimension = 0; // dim of the base; 0 for fields
    bool char_prime_to_rank_factorial = false;
    bool rank_at_least_half_dim_plus_two = false;

    static HypothesisProfile of(const Field& field, std::size_t rank);
    json to_json() const;
};

struct EngineResult {
    std::optional<ModIso> iso;
    std::vector<Obligation> obligations;
    json certificate;
    bool ok() const { return iso.has_value(); }
};

/// P ≅ P(0) ⊗ A(Σ) by recursion over Vorst squares. Simplex pieces go to the
/// built-in oracle, then `oracle` if given, else become obligations.
EngineResult extend_witness(const ProjModule& p, const ExtendOracle& oracle = {});

/// Same recursion, building an iso P ≅ P′ from stab: P ⊕ free ≅ P′ ⊕ free.
/// `lifter` lifts automorphisms of P′ over A0 to A2 (default: the section).
/// Leaves: built-in when both modules extend there, else `leaf` if given, else obligations.
using CancelOracle = std::function<OracleAnswer(const ProjModule& p, const ProjModule& q, const ModIso& stab)>;
EngineResult cancel_witness(const ProjModule& p, const ProjModule& q, const ModIso& stab,
                            const AutLifter& lifter = {}, const CancelOracle& leaf = {});

struct UmLiftResult {
    std::optional<UmRow> lifted;
    std::vector<Obligation> obligations;
    std::optional<GLLiftResult> gl; // set once the GL lift was attempted
    json certificate;
    bool ok() const { return lifted.has_value(); }
};

/// Lifts v ∈ Um_r(R/J) to u ∈ Um_r(R) with u ≡ v mod J, for π: R -> R/J a
/// variable-identity map onto a Stanley-Reisner ring.
UmLiftResult umrow_lift(const UmRow& v, const RingHom& pi, const ExtendOracle& oracle = {},
                        std::span<const LiftStrategy> strategies = default_strategies());

/// Certificate for a Milnor patch: Whitehead data, the patch pieces and the glue.
json patch_certificate(const FiberSquare& square, const Invertible& sigma, const ProjModule& patched);

/// Certificate for a single GL lift.
json gl_lift_certificate(const RingHom& pi, const Invertible& sigma, const GLLiftResult& result);

} // namespace srpb
