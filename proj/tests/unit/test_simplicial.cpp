#include "doctest.h"

#include "srpb/errors.hpp"
#include "../support.hpp"

using namespace srpb;
using namespace srpb::testing;

namespace {

const auto hollow = [] { return complex_of(3, {{0, 1}, {1, 2}, {0, 2}}); };
const auto two_points = [] { return complex_of(2, {{0}, {1}}); };

// Oracle: a set is a face iff some facet contains it.
bool scan_face(const SimplicialComplex& c, VertexSet s)
{
    for (auto f : c.facets())
        if ((s & ~f) == 0)
            return true;
    return false;
}

// Oracle: minimal non-faces by brute-force subset enumeration.
std::vector<VertexSet> brute_minimal_nonfaces(const SimplicialComplex& c)
{
    std::vector<VertexSet> out;
    const VertexSet all = (VertexSet{1} << c.ambient()) - 1;
    for (VertexSet s = 1; s <= all; ++s) {
        if (scan_face(c, s))
            continue;
        bool minimal = true;
        for (std::size_t v = 0; v < c.ambient(); ++v)
            if (s >> v & 1)
                minimal = minimal && scan_face(c, s & ~(VertexSet{1} << v));
        if (minimal)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("faces")
{
    auto h = hollow();
    CHECK(h.is_face(0));
    CHECK(h.is_face(0b011));
    CHECK_FALSE(h.is_face(0b111));
    CHECK(h.is_face(0b011) == scan_face(h, 0b011));
    CHECK_THROWS_AS(h.is_face(0b1000), InputError);
    CHECK_THROWS_AS(complex_of(2, {{0, 2}}), InputError);
    CHECK(h.faces().size() == 7);
}

TEST_CASE("minimal non-faces and the Stanley-Reisner ideal")
{
    CHECK(minimal_nonfaces(SimplicialComplex::full_simplex(4)).empty());
    CHECK(sorted(minimal_nonfaces(two_points())) == std::vector<VertexSet>{0b11});
    CHECK(sorted(minimal_nonfaces(hollow())) == std::vector<VertexSet>{0b111});
    CHECK(sr_ideal(SimplicialComplex::full_simplex(3)).empty());
    CHECK(sr_ideal(two_points()) == std::vector<Monomial>{Monomial({1, 1})});
    auto ghosts = sr_ideal(SimplicialComplex::empty_complex(2));
    CHECK(ghosts.size() == 2);
    CHECK(std::find(ghosts.begin(), ghosts.end(), Monomial({1, 0})) != ghosts.end());
    CHECK(std::find(ghosts.begin(), ghosts.end(), Monomial({0, 1})) != ghosts.end());
}

TEST_CASE("deletion, link, cone, star")
{
    auto h = hollow();
    CHECK(link(h, 0) == complex_of(3, {{1}, {2}}));
    CHECK(deletion(h, 0) == complex_of(3, {{1, 2}}));
    CHECK(cone(SimplicialComplex::empty_complex(3), 1) == complex_of(3, {{1}}));
    auto edge = complex_of(3, {{1, 2}});
    CHECK(deletion(edge, 0) == edge);
    CHECK_THROWS_AS(cone(h, 0), InputError);
    CHECK(star(h, 0) == complex_of(3, {{0, 1}, {0, 2}}));
}

TEST_CASE("simplices")
{
    CHECK(is_simplex(SimplicialComplex::full_simplex(3)));
    CHECK(is_simplex(SimplicialComplex::empty_complex(3)));
    CHECK_FALSE(is_simplex(hollow()));
    CHECK_THROWS_AS(vorst_decompose(SimplicialComplex::full_simplex(2)), PreconditionError);
}

TEST_CASE("Vorst decomposition examples")
{
    auto d = vorst_decompose(two_points());
    CHECK(d.apex == 0);
    CHECK(d.sigma1 == complex_of(2, {{1}}));
    CHECK(d.sigma2 == SimplicialComplex::empty_complex(2));

    d = vorst_decompose(hollow());
    CHECK(d.apex == 0);
    CHECK(d.sigma1 == complex_of(3, {{1, 2}}));
    CHECK(d.sigma2 == complex_of(3, {{1}, {2}}));

    d = vorst_decompose(complex_of(3, {{0, 1}, {0, 2}}));
    CHECK(d.apex == 1);
    CHECK(d.sigma1 == complex_of(3, {{0, 2}}));
    CHECK(d.sigma2 == complex_of(3, {{0}}));
}

TEST_CASE("exhaustive properties on small vertex sets")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& c : all_complexes(n)) {
            const VertexSet all = (VertexSet{1} << n) - 1;
            auto nonfaces = minimal_nonfaces(c);
            CHECK(sorted(nonfaces) == brute_minimal_nonfaces(c));
            for (VertexSet s = 0; s <= all; ++s) {
                bool face = c.is_face(s);
                CHECK(face == scan_face(c, s));
                bool contains = false;
                for (auto m : nonfaces)
                    contains = contains || (m & ~s) == 0;
                CHECK(face != contains);
                if (face)
                    for (std::size_t v = 0; v < n; ++v)
                        CHECK(c.is_face(s & ~(VertexSet{1} << v)));
            }
            CHECK(complex_from_ideal(n, sr_ideal(c)) == c);
            if (is_simplex(c))
                continue;
            auto d = vorst_decompose(c);
            CHECK(decomposition_holds(c, d));
            // independent recomputation of the identities
            auto c2 = cone(d.sigma2, d.apex);
            for (VertexSet s = 0; s <= all; ++s) {
                CHECK(scan_face(c, s) == (scan_face(d.sigma1, s) || scan_face(c2, s)));
                CHECK((scan_face(d.sigma1, s) && scan_face(c2, s)) == scan_face(d.sigma2, s));
            }
            CHECK(star(c, d.apex) != c);
        }
    }
}
