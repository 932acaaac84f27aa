#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "srpb/quotient/ring.hpp"
#include "srpb/simplicial.hpp"

namespace srpb {

/// Reads the structured-text input files. Every file is a JSON object that may
/// carry "format": "srpb/1"; any other format tag is rejected. Rings can be given
/// inline or as a path relative to the referencing file.
class InputLoader {
public:
    nlohmann::json read(const std::filesystem::path& path) const;

    ContextPtr context(const Field& field, std::size_t vars);

    /// {"field", "vars", "ideal": [monomials]} or a path to such a file.
    QuotientRing ring(const nlohmann::json& spec, const std::filesystem::path& base = {});
    QuotientRing ring_file(const std::filesystem::path& path);

    /// {"ambient", "facets"}; [[]] is the complex {∅}.
    SimplicialComplex complex(const nlohmann::json& spec);
    SimplicialComplex complex_file(const std::filesystem::path& path);

    /// {"source", "target", "images"}.
    RingHom hom_file(const std::filesystem::path& path);

    struct Matrix {
        QuotientRing ring;
        PolyMatrix m;
    };
    /// {"ring", "rows", "cols", "entries"}; entries are reduced in the ring.
    Matrix matrix_file(const std::filesystem::path& path);

    struct Generators {
        ContextPtr ctx;
        std::vector<Polynomial> gens;
    };
    /// {"field", "vars", "gens": [expressions]}.
    Generators gens_file(const std::filesystem::path& path);

private:
    std::map<std::string, ContextPtr> contexts_;
};

nlohmann::json ring_json(const QuotientRing& r);
nlohmann::json complex_json(const SimplicialComplex& c);
nlohmann::json matrix_json(const QuotientRing& r, const PolyMatrix& m);

} // namespace srpb
