#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "srpb/polycore/monomial.hpp"

namespace srpb {

/// Subset of the ambient vertex set {0..n}; bit i is vertex i.
using VertexSet = std::uint64_t;

std::vector<std::size_t> vertices_of(VertexSet s);
VertexSet vertex_set(std::span<const std::size_t> vertices);
std::string format_face(VertexSet s);

/// Simplicial complex on the ambient vertices {0..n}, stored by its facets.
///
/// The empty face always belongs to the complex. Vertices that lie in no face
/// ("ghost" vertices) are allowed; each contributes X_i to the Stanley-Reisner ideal.
class SimplicialComplex {
public:
    /// Drops non-maximal facets; an empty facet list means the complex {∅}.
    SimplicialComplex(std::size_t ambient, std::vector<VertexSet> facets);

    /// Throws InputError on out-of-range vertices.
    static SimplicialComplex from_facets(std::size_t ambient,
                                         const std::vector<std::vector<std::size_t>>& facets);
    /// Full simplex on all ambient vertices.
    static SimplicialComplex full_simplex(std::size_t ambient);
    /// The complex {∅}.
    static SimplicialComplex empty_complex(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    /// Facets sorted by their bit pattern.
    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet used_vertices() const;
    VertexSet all_vertices() const;

    /// Throws InputError if s has a vertex outside the ambient set.
    bool is_face(VertexSet s) const;
    /// Every face, ordered by size then bit pattern.
    std::vector<VertexSet> faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

    std::string to_string() const;

private:
    std::size_t ambient_;
    std::vector<VertexSet> facets_;
};

/// Minimal non-faces, ordered by size then bit pattern.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

/// Generators of I(Σ): one square-free monomial per minimal non-face.
std::vector<Monomial> sr_ideal(const SimplicialComplex& complex);

/// Complex whose faces are the supports of monomials outside the square-free ideal.
/// Throws InputError if a generator is not square-free.
SimplicialComplex complex_from_ideal(std::size_t ambient, std::span<const Monomial> generators);

/// Faces not containing i.
SimplicialComplex deletion(const SimplicialComplex& complex, std::size_t vertex);
/// {F : i ∉ F, F ∪ {i} ∈ Σ}; requires i to be a used vertex.
SimplicialComplex link(const SimplicialComplex& complex, std::size_t vertex);
/// Faces F and F ∪ {i}; requires i unused.
SimplicialComplex cone(const SimplicialComplex& complex, std::size_t vertex);
/// cone(link(Σ, i), i).
SimplicialComplex star(const SimplicialComplex& complex, std::size_t vertex);

/// True iff the used vertices form a face; {∅} counts as the empty simplex.
bool is_simplex(const SimplicialComplex& complex);

/// Σ = Σ₁ ∪ C(Σ₂) with Σ₂ ⊆ Σ₁ ⊆ Σ^apex and Σ₁ ∩ C(Σ₂) = Σ₂.
struct VorstDecomposition {
    std::size_t apex;
    SimplicialComplex sigma1; // deletion at apex
    SimplicialComplex sigma2; // link at apex
};

/// Apex = smallest used vertex whose star is a proper subcomplex.
/// Throws PreconditionError on a simplex; the set identities are re-checked
/// before returning (InternalError if they fail).
VorstDecomposition vorst_decompose(const SimplicialComplex& complex);

/// Checks the three decomposition identities by face enumeration.
bool decomposition_holds(const SimplicialComplex& complex, const VorstDecomposition& d);

} // namespace srpb
