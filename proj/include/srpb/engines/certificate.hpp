#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "srpb/projmod.hpp"

namespace srpb {

using json = nlohmann::json;

inline constexpr const char* certificate_format = "srpb/1";

/// One factor of a product in a linear claim: a registered matrix, optionally pushed
/// through a hom and/or transposed, or an identity block of the given size.
struct LinearFactor {
    const QuotientRing* ring = nullptr; // ring the matrix lives in
    PolyMatrix matrix;
    const RingHom* hom = nullptr;
    bool transpose = false;

    static LinearFactor of(const QuotientRing& ring, const PolyMatrix& m, bool transpose = false)
    {
        return {&ring, m, nullptr, transpose};
    }
    static LinearFactor through(const RingHom& h, const PolyMatrix& m)
    {
        return {&h.source(), m, &h, false};
    }
};

struct LinearTerm {
    int sign = 1;
    std::vector<LinearFactor> factors;
};

/// Collects rings, homs, squares and matrices into numbered tables and builds
/// claims referencing them. Registration order fixes every name, so equal inputs
/// give byte-identical documents.
class CertBuilder {
public:
    std::string ring(const QuotientRing& r);
    std::string hom(const RingHom& h);
    std::string square(const FiberSquare& s);
    std::size_t matrix(const QuotientRing& r, const PolyMatrix& m);

    json idempotent(const ProjModule& p);
    /// nf_target(h(from)) = to
    json image(const RingHom& h, const PolyMatrix& from, const PolyMatrix& to);
    json iso(const ModIso& iso);
    json inverse(const QuotientRing& r, const PolyMatrix& m, const PolyMatrix& inv);
    /// Σ sign·∏ factors = result, evaluated in `r`.
    json linear(const QuotientRing& r, const std::vector<LinearTerm>& terms, const PolyMatrix& result);
    json square_claim(const FiberSquare& s);
    json hom_claim(const RingHom& h);
    json whitehead(const FiberSquare& s, const Invertible& sigma, const Invertible& u);
    json gl_lift(const RingHom& pi, const Invertible& sigma, const Invertible& delta);
    json unimodular(const QuotientRing& r, const PolyMatrix& v, const PolyMatrix& w);
    /// nf_target(pi(u)) = v for rows
    json congruence(const RingHom& pi, const PolyMatrix& u, const PolyMatrix& v);
    /// Claims that m = nf_A(m1 + m2 - j1(m1)) and that it restricts to m1, m2.
    std::vector<json> glue_claims(const FiberSquare& s, const PolyMatrix& m1, const PolyMatrix& m2,
                                  const PolyMatrix& m);

    static json node(const std::string& kind, const std::string& label);

    json document(const std::string& kind, const json& root, const json& obligations, const json& profile) const;

private:
    std::vector<QuotientRing> rings_;
    json ring_table_ = json::object();
    std::vector<RingHom> homs_;
    json hom_table_ = json::object();
    std::vector<std::string> square_keys_;
    json square_table_ = json::object();
    std::map<std::string, std::size_t> matrix_keys_;
    json matrix_table_ = json::array();
};

/// Serialized form: two-space indentation, sorted keys, trailing newline.
std::string dump_certificate(const json& doc);

} // namespace srpb
