#pragma once

#include "srpb/polycore/matrix.hpp"

namespace srpb {

/// U * M * V = D with D diagonal, d_i | d_{i+1}, nonzero d_i monic.
/// U and V come with their exact inverses.
struct SmithForm {
    PolyMatrix U;
    PolyMatrix U_inv;
    PolyMatrix D;
    PolyMatrix V;
    PolyMatrix V_inv;
};

/// Smith normal form over k[t]. All entries must involve at most one common
/// variable; otherwise UnsupportedRingError.
SmithForm smith_normal_form(const PolyMatrix& m);

} // namespace srpb
