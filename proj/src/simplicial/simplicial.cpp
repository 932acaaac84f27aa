#include "srpb/simplicial.hpp"

#include "srpb/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace srpb {

namespace {

bool size_then_bits(VertexSet a, VertexSet b)
{
    auto pa = std::popcount(a);
    auto pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

VertexSet bit(std::size_t v) { return VertexSet{1} << v; }

void check_vertex(const SimplicialComplex& c, std::size_t v)
{
    if (v >= c.ambient())
        throw InputError("vertex " + std::to_string(v) + " outside the ambient set {0.." +
                         std::to_string(c.ambient() - 1) + "}");
}

} // namespace

std::vector<std::size_t> vertices_of(VertexSet s)
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; s != 0; ++v, s >>= 1)
        if (s & 1u)
            out.push_back(v);
    return out;
}

VertexSet vertex_set(std::span<const std::size_t> vertices)
{
    VertexSet s = 0;
    for (auto v : vertices) {
        if (v >= max_variables)
            throw InputError("vertex index " + std::to_string(v) + " too large");
        s |= bit(v);
    }
    return s;
}

std::string format_face(VertexSet s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto v : vertices_of(s)) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

SimplicialComplex::SimplicialComplex(std::size_t ambient, std::vector<VertexSet> facets)
    : ambient_(ambient)
{
    if (ambient > max_variables)
        throw InputError("at most " + std::to_string(max_variables) + " ambient vertices are supported");
    for (auto f : facets)
        if ((f & ~all_vertices()) != 0)
            throw InputError("facet " + format_face(f) + " leaves the ambient vertex set");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto f : facets) {
        bool contained = std::any_of(facets.begin(), facets.end(),
                                     [f](VertexSet g) { return g != f && (f & g) == f; });
        if (!contained)
            facets_.push_back(f);
    }
    if (facets_.empty())
        facets_.push_back(0);
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t ambient,
                                                 const std::vector<std::vector<std::size_t>>& facets)
{
    std::vector<VertexSet> sets;
    for (const auto& f : facets) {
        for (auto v : f)
            if (v >= ambient)
                throw InputError("facet vertex " + std::to_string(v) + " outside the ambient set");
        sets.push_back(vertex_set(f));
    }
    return SimplicialComplex(ambient, std::move(sets));
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t ambient)
{
    SimplicialComplex c(ambient, {});
    return SimplicialComplex(ambient, {c.all_vertices()});
}

SimplicialComplex SimplicialComplex::empty_complex(std::size_t ambient)
{
    return SimplicialComplex(ambient, {});
}

VertexSet SimplicialComplex::all_vertices() const
{
    return ambient_ == 64 ? ~VertexSet{0} : (VertexSet{1} << ambient_) - 1;
}

VertexSet SimplicialComplex::used_vertices() const
{
    VertexSet s = 0;
    for (auto f : facets_)
        s |= f;
    return s;
}

bool SimplicialComplex::is_face(VertexSet s) const
{
    if ((s & ~all_vertices()) != 0)
        throw InputError("vertex set " + format_face(s) + " leaves the ambient vertex set");
    return std::any_of(facets_.begin(), facets_.end(), [s](VertexSet f) { return (s & f) == s; });
}

std::vector<VertexSet> SimplicialComplex::faces() const
{
    std::set<VertexSet> all;
    for (auto f : facets_) {
        // enumerate submasks of f, including 0
        VertexSet sub = f;
        for (;;) {
            all.insert(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<VertexSet> out(all.begin(), all.end());
    std::sort(out.begin(), out.end(), size_then_bits);
    return out;
}

std::string SimplicialComplex::to_string() const
{
    std::ostringstream out;
    out << "ambient " << ambient_ << ", facets ";
    for (std::size_t k = 0; k < facets_.size(); ++k)
        out << (k ? " " : "") << format_face(facets_[k]);
    return out.str();
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex)
{
    std::set<VertexSet> found;
    const auto used = complex.used_vertices();
    for (auto v : vertices_of(complex.all_vertices() & ~used))
        found.insert(bit(v));
    for (auto face : complex.faces()) {
        for (auto v : vertices_of(used & ~face)) {
            VertexSet s = face | bit(v);
            if (complex.is_face(s))
                continue;
            bool minimal = true;
            for (auto u : vertices_of(s))
                if (!complex.is_face(s & ~bit(u))) {
                    minimal = false;
                    break;
                }
            if (minimal)
                found.insert(s);
        }
    }
    std::vector<VertexSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), size_then_bits);
    return out;
}

std::vector<Monomial> sr_ideal(const SimplicialComplex& complex)
{
    std::vector<Monomial> gens;
    for (auto s : minimal_nonfaces(complex)) {
        Monomial m(complex.ambient());
        for (auto v : vertices_of(s))
            m[v] = 1;
        gens.push_back(std::move(m));
    }
    return gens;
}

SimplicialComplex complex_from_ideal(std::size_t ambient, std::span<const Monomial> generators)
{
    std::vector<VertexSet> nonfaces;
    for (const auto& g : generators) {
        if (g.size() != ambient)
            throw InputError("generator length does not match the ambient vertex count");
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > 1)
                throw InputError("monomial ideal is not square-free");
        nonfaces.push_back(g.support());
    }
    if (std::any_of(nonfaces.begin(), nonfaces.end(), [](VertexSet s) { return s == 0; }))
        throw InputError("unit ideal has no simplicial complex");

    // Maximal sets containing no generator, by backtracking over the vertices.
    std::vector<VertexSet> facets;
    auto admissible = [&](VertexSet s) {
        return std::none_of(nonfaces.begin(), nonfaces.end(), [s](VertexSet n) { return (n & s) == n; });
    };
    auto search = [&](auto&& self, std::size_t v, VertexSet current) -> void {
        if (v == ambient) {
            facets.push_back(current);
            return;
        }
        if (admissible(current | bit(v)))
            self(self, v + 1, current | bit(v));
        self(self, v + 1, current);
    };
    search(search, 0, 0);
    return SimplicialComplex(ambient, std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& complex, std::size_t vertex)
{
    check_vertex(complex, vertex);
    std::vector<VertexSet> facets;
    for (auto f : complex.facets())
        facets.push_back(f & ~bit(vertex));
    return SimplicialComplex(complex.ambient(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex, std::size_t vertex)
{
    check_vertex(complex, vertex);
    if (!(complex.used_vertices() & bit(vertex)))
        throw InputError("link at unused vertex " + std::to_string(vertex) + " has no faces");
    std::vector<VertexSet> facets;
    for (auto f : complex.facets())
        if (f & bit(vertex))
            facets.push_back(f & ~bit(vertex));
    return SimplicialComplex(complex.ambient(), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& complex, std::size_t vertex)
{
    check_vertex(complex, vertex);
    if (complex.used_vertices() & bit(vertex))
        throw InputError("cone apex " + std::to_string(vertex) + " is already a vertex of the complex");
    std::vector<VertexSet> facets;
    for (auto f : complex.facets())
        facets.push_back(f | bit(vertex));
    return SimplicialComplex(complex.ambient(), std::move(facets));
}

SimplicialComplex star(const SimplicialComplex& complex, std::size_t vertex)
{
    return cone(link(complex, vertex), vertex);
}

bool is_simplex(const SimplicialComplex& complex)
{
    return complex.is_face(complex.used_vertices());
}

bool decomposition_holds(const SimplicialComplex& complex, const VorstDecomposition& d)
{
    const auto apex = bit(d.apex);
    if (d.sigma1.used_vertices() & apex)
        return false;
    if (d.sigma2.used_vertices() & apex)
        return false;
    auto faces = complex.faces();
    auto f1 = d.sigma1.faces();
    auto f2 = d.sigma2.faces();
    auto fc = cone(d.sigma2, d.apex).faces();
    std::set<VertexSet> s(faces.begin(), faces.end());
    std::set<VertexSet> s1(f1.begin(), f1.end());
    std::set<VertexSet> s2(f2.begin(), f2.end());
    std::set<VertexSet> sc(fc.begin(), fc.end());

    // Σ₂ ⊆ Σ₁
    if (!std::includes(s1.begin(), s1.end(), s2.begin(), s2.end()))
        return false;
    std::set<VertexSet> unite;
    std::set_union(s1.begin(), s1.end(), sc.begin(), sc.end(), std::inserter(unite, unite.end()));
    if (unite != s)
        return false;
    std::set<VertexSet> meet;
    std::set_intersection(s1.begin(), s1.end(), sc.begin(), sc.end(), std::inserter(meet, meet.end()));
    return meet == s2;
}

VorstDecomposition vorst_decompose(const SimplicialComplex& complex)
{
    if (is_simplex(complex))
        throw PreconditionError("Vorst decomposition needs a complex that is not a simplex");
    for (auto v : vertices_of(complex.used_vertices())) {
        if (star(complex, v) == complex)
            continue;
        VorstDecomposition d{v, deletion(complex, v), link(complex, v)};
        if (!decomposition_holds(complex, d))
            throw InternalError("decomposition identities fail at apex " + std::to_string(v));
        return d;
    }
    throw InternalError("non-simplex complex " + complex.to_string() + " is a cone over every vertex");
}

} // namespace srpb
