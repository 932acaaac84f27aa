#pragma once

#include <optional>
#include <span>
#include <vector>

#include "srpb/polycore/matrix.hpp"
#include "srpb/quotient/ring.hpp"

namespace srpb {

/// Reduced Gröbner basis in which every element carries its expression in the inputs:
/// basis[k] = Σ_i cofactors[k][i] * inputs[i], exactly.
struct GroebnerBasis {
    std::vector<Polynomial> inputs;
    ContextPtr context; // carries the term order used for the basis
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> cofactors;

    bool is_unit_ideal() const { return basis.size() == 1 && basis.front().is_one(); }
};

/// Buchberger with the normal selection strategy (lowest lcm degree, ties by
/// pair index), product criterion, then minimalization and tail reduction.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order);
/// Uses the term order of the generators' context.
GroebnerBasis buchberger(std::span<const Polynomial> gens);

/// Every S-polynomial of the basis reduces to zero.
bool is_confluent(const GroebnerBasis& gb);
/// basis[k] equals its cofactor combination, for every k.
bool cofactors_consistent(const GroebnerBasis& gb);

/// Remainder of f on division by the basis.
Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb);

/// Σ coefficients[i] * inputs[i] = target, in the ambient polynomial ring.
struct MembershipCertificate {
    Polynomial target;
    std::vector<Polynomial> coefficients;
};

bool certificate_holds(const MembershipCertificate& cert, std::span<const Polynomial> gens);

std::optional<MembershipCertificate> member(const Polynomial& f, const GroebnerBasis& gb);
std::optional<MembershipCertificate> member(const Polynomial& f, std::span<const Polynomial> gens);

/// For a row v over R, returns w with nf(v * w^T) = 1, or nullopt when v is not unimodular.
std::optional<PolyMatrix> unimodular_cert(const PolyMatrix& v, const QuotientRing& ring);

} // namespace srpb
