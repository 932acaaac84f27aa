#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srpb/quotient/ring.hpp"

namespace srpb {

/// A square matrix together with an inverse over a fixed quotient ring.
struct Invertible {
    PolyMatrix matrix;
    PolyMatrix inverse;
};

/// M·M⁻¹ = M⁻¹·M = I after normal form in `ring`.
bool is_inverse_pair(const QuotientRing& ring, const PolyMatrix& m, const PolyMatrix& inverse);

struct UnitInverseResult {
    Polynomial det; // nf(det M)
    std::optional<PolyMatrix> inverse;
    bool ok() const { return inverse.has_value(); }
};

/// Inverts M when nf(det M) is a unit of R, found through a membership certificate
/// for 1 in (det M) + I. ShapeError for non-square input.
UnitInverseResult det_unit_inverse(const PolyMatrix& m, const QuotientRing& ring);

/// Inverse of a ring element, if it is a unit.
std::optional<Polynomial> unit_inverse(const Polynomial& f, const QuotientRing& ring);

/// U over A2 with j2(U) = σ ⊕ σ⁻¹, as the product
/// [[1,s(σ)],[0,1]]·[[1,0],[-s(σ⁻¹),1]]·[[1,s(σ)],[0,1]]·[[0,-1],[1,0]].
/// PreconditionError if σ's inverse does not verify over j2's target.
Invertible whitehead_lift(const Invertible& sigma, const RingHom& j2, const RingHom& section);

/// One factor in a word for an invertible matrix: an elementary I + value·e_{row,col}
/// or a diagonal matrix of units.
struct Factor {
    enum class Kind { elementary, diagonal };
    Kind kind;
    std::size_t row = 0;
    std::size_t col = 0;
    std::vector<Polynomial> values; // one entry for elementary, n for diagonal
};

/// σ = factors[0]·factors[1]·…
struct Factorization {
    std::size_t size = 0;
    std::vector<Factor> factors;
};

/// Evaluates the word, reducing in `ring`, with its inverse. nullopt if a diagonal
/// entry is not a unit of `ring`.
std::optional<Invertible> materialize(const Factorization& word, const QuotientRing& ring);

/// Gaussian elimination using only unit pivots (a non-unit diagonal is repaired by
/// adding a row whose entry is a unit). Fails with a reason in `why`.
std::optional<Factorization> unit_pivot_factor(const PolyMatrix& sigma, const QuotientRing& ring,
                                               std::string& why);

/// Unit-pivot elimination that, when a column has no unit, lowers leading terms by
/// row operations (one leading term dividing another) until a unit appears.
/// Terminates; fails when no leading term divides another.
std::optional<Factorization> lead_reduction_factor(const PolyMatrix& sigma, const QuotientRing& ring,
                                                   std::string& why);

/// Euclidean row reduction for a polynomial ring in at most one live variable.
std::optional<Factorization> euclid_factor(const PolyMatrix& sigma, const QuotientRing& ring,
                                           std::string& why);

/// Factors σ over a Stanley-Reisner ring by descending through fiber squares:
/// factor i1(σ) over A1, then the A2-image of the corrected matrix, with
/// univariate or lead-reduction elimination at the simplex leaves.
std::optional<Factorization> descent_factor(const Invertible& sigma, const QuotientRing& ring,
                                            std::string& why);

enum class LiftStrategy { entrywise, elementary, section, descent };

std::string to_string(LiftStrategy s);
std::optional<LiftStrategy> parse_strategy(const std::string& name);
/// entrywise, elementary, section, descent.
std::span<const LiftStrategy> default_strategies();

struct StrategyAttempt {
    LiftStrategy strategy;
    bool ok = false;
    std::string detail;
};

struct GLLiftResult {
    std::optional<Invertible> lift;
    std::optional<LiftStrategy> used;
    std::vector<StrategyAttempt> attempts;
    bool ok() const { return lift.has_value(); }
    std::string diagnostics() const;
};

/// Δ ∈ GL_r(R) with π(Δ) = σ, for π: R -> R/J a variable-identity quotient map.
/// Every returned lift has been checked: π(Δ) = σ and Δ·Δ⁻¹ = I.
/// `section`, when given, must be a hom R/J -> R (used by the section strategy).
GLLiftResult lift_gl(const Invertible& sigma, const RingHom& pi,
                     std::span<const LiftStrategy> strategies = default_strategies(),
                     const RingHom* section = nullptr);

} // namespace srpb
