#include "doctest.h"

#include "srpb/errors.hpp"
#include "srpb/projmod.hpp"
#include "../support.hpp"

using namespace srpb;
using namespace srpb::testing;

namespace {

FiberSquare two_points()
{
    return build_vorst_square(Field::rationals(), complex_of(2, {{0}, {1}}));
}

FiberSquare hollow()
{
    return build_vorst_square(Field::rationals(), complex_of(3, {{0, 1}, {1, 2}, {0, 2}}));
}

// Random product of elementaries over `ring`, with its inverse.
Invertible random_unit(std::mt19937_64& rng, const QuotientRing& ring, std::size_t n, int length,
                       std::uint32_t degree = 2)
{
    auto ctx = ring.context();
    Invertible out{ring.identity(n), ring.identity(n)};
    for (int k = 0; k < length; ++k) {
        std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n;
        auto f = ring.normal_form(random_poly(rng, ctx, degree, 3));
        out.matrix = ring.mul(out.matrix, PolyMatrix::elementary(ctx, n, a, b, f));
        out.inverse = ring.mul(PolyMatrix::elementary(ctx, n, a, b, -f), out.inverse);
    }
    return out;
}

PolyMatrix top_rows(const ContextPtr& ctx, std::size_t r, std::size_t n)
{
    PolyMatrix m(ctx, r, n);
    for (std::size_t i = 0; i < r; ++i)
        m(i, i) = Polynomial::constant(ctx, 1);
    return m;
}

} // namespace

TEST_CASE("modules and rank")
{
    auto ctx = vars(2);
    auto ring = quotient(ctx, {"x0*x1"});
    CHECK(rank(ProjModule(ring, mat(ctx, 2, 2, {"1", "0", "0", "0"}))) == 1);
    CHECK(rank(ProjModule::free(ring, 3)) == 3);
    auto g = mat(ctx, 2, 2, {"1", "x0 + 3*x1^2", "0", "1"});
    auto ginv = mat(ctx, 2, 2, {"1", "-x0 - 3*x1^2", "0", "1"});
    auto e = ring.mul(ring.mul(g, mat(ctx, 2, 2, {"1", "0", "0", "0"})), ginv);
    CHECK(rank(ProjModule(ring, e)) == 1);
    CHECK_THROWS_AS(ProjModule(ring, mat(ctx, 1, 1, {"2"})), PreconditionError);
    // non-diagonal projector: diagonal entries 1/2, trace 1
    auto half = mat(ctx, 2, 2, {"1/2", "1/2", "1/2", "1/2"});
    CHECK(rank(ProjModule(ring, half)) == 1);
}

TEST_CASE("base change")
{
    auto sq = two_points();
    auto ctx = sq.A.context();
    auto c = ProjModule(sq.A, mat(ctx, 2, 2, {"1", "0", "0", "0"}));
    CHECK(base_change(c, sq.i1).idempotent() == c.idempotent());
    auto g = mat(ctx, 2, 2, {"1", "x0 + x1", "0", "1"});
    auto ginv = mat(ctx, 2, 2, {"1", "-x0 - x1", "0", "1"});
    ProjModule p(sq.A, sq.A.mul(sq.A.mul(g, c.idempotent()), ginv));
    auto aug = RingHom::augmentation(sq.A);
    auto p0 = base_change(p, aug);
    CHECK(p0.idempotent() == substitute(p.idempotent(), std::vector<Polynomial>(2, Polynomial(ctx))));
    ProjModule q0(sq.A0, mat(ctx, 2, 2, {"1", "0", "0", "0"}));
    CHECK(base_change(base_change(q0, sq.section), sq.j2) == q0);
}

TEST_CASE("kernel modules")
{
    auto ctx = vars(3);
    auto R = QuotientRing::polynomial_ring(ctx);
    UmRow e1{R, mat(ctx, 1, 3, {"1", "0", "0"}), mat(ctx, 1, 3, {"1", "0", "0"})};
    CHECK(kernel_module(e1).idempotent() == mat(ctx, 3, 3, {"0", "0", "0", "0", "1", "0", "0", "0", "1"}));

    auto c2 = vars(2);
    auto ring = quotient(c2, {"x0*x1"});
    UmRow u{ring, mat(c2, 1, 2, {"1 + x0", "x0"}), mat(c2, 1, 2, {"1", "-1"})};
    auto e = kernel_module(u).idempotent();
    // oracle: wᵀ·v written out entry by entry
    auto expect = mat(c2, 2, 2, {"1 - (1 + x0)", "-x0", "1 + x0", "1 + x0"});
    CHECK(e == expect);
    CHECK(ring.mul(e, e) == e);
    CHECK(ring.mul(u.v, e).is_zero());
    CHECK(rank(kernel_module(u)) == 1);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto g = random_unit(rng, ring, 3, 4);
        auto row = g.matrix.block(0, 0, 1, 3);
        auto um = make_um_row(ring, row);
        REQUIRE(um);
        CHECK(um_holds(*um));
        auto k = kernel_module(*um);
        CHECK(ring.mul(um->v, k.idempotent()).is_zero());
        CHECK(rank(k) == 2);
    }
    CHECK_FALSE(make_um_row(ring, mat(c2, 1, 2, {"x0", "x1"})));
    CHECK_THROWS_AS(kernel_module(UmRow{ring, mat(c2, 1, 2, {"x0", "x1"}), mat(c2, 1, 2, {"1", "1"})}),
                    PreconditionError);
}

TEST_CASE("Milnor patch examples")
{
    auto sq = two_points();
    auto ctx = sq.A.context();
    auto p = milnor_patch(sq, {sq.A0.identity(2), sq.A0.identity(2)});
    CHECK(p.idempotent() == PolyMatrix::block_diagonal(sq.A.identity(2), PolyMatrix(ctx, 2, 2)));
    p = milnor_patch(sq, {sq.A0.identity(1), sq.A0.identity(1)});
    CHECK(rank(p) == 1);

    // σ = (3): the four factors multiply to diag(3, 1/3), a constant that fixes diag(1, 0)
    auto u = mat(ctx, 2, 2, {"1", "3", "0", "1"}) * mat(ctx, 2, 2, {"1", "0", "-1/3", "1"}) *
             mat(ctx, 2, 2, {"1", "3", "0", "1"}) * mat(ctx, 2, 2, {"0", "-1", "1", "0"});
    CHECK(u == mat(ctx, 2, 2, {"3", "0", "0", "1/3"}));
    p = milnor_patch(sq, {mat(ctx, 1, 1, {"3"}), mat(ctx, 1, 1, {"1/3"})});
    CHECK(rank(p) == 1);
    CHECK(sq.i1.apply(p.idempotent()) == mat(ctx, 2, 2, {"1", "0", "0", "0"}));
    CHECK(sq.i2.apply(p.idempotent()) == mat(ctx, 2, 2, {"1", "0", "0", "0"}));
}

TEST_CASE("Milnor patch restriction laws on random units")
{
    std::mt19937_64 rng(41);
    for (auto sq : {two_points(), hollow()}) {
        for (int i = 0; i < 10; ++i) {
            std::size_t r = 1 + rng() % 2;
            auto sigma = r == 1 ? Invertible{sq.A0.identity(1), sq.A0.identity(1)} : random_unit(rng, sq.A0, r, 3);
            auto p = milnor_patch(sq, sigma);
            CHECK(rank(p) == r);
            auto u = whitehead_lift(sigma, sq.j2, sq.section);
            auto proj = PolyMatrix::block_diagonal(sq.A.identity(r), PolyMatrix(sq.A.context(), r, r));
            CHECK(sq.i1.apply(p.idempotent()) == proj);
            CHECK(sq.i2.apply(p.idempotent()) == sq.A2.mul(sq.A2.mul(u.matrix, proj), u.inverse));
        }
    }
}

TEST_CASE("a Milnor patch glues back to a free module")
{
    std::mt19937_64 rng(43);
    for (auto sq : {two_points(), hollow()}) {
        auto ctx = sq.A.context();
        for (int i = 0; i < 5; ++i) {
            const std::size_t r = 2;
            auto sigma = random_unit(rng, sq.A0, r, 3);
            auto p = milnor_patch(sq, sigma);
            auto q = ProjModule::free(sq.A, r);
            auto u = whitehead_lift(sigma, sq.j2, sq.section);
            auto top = top_rows(ctx, r, 2 * r);
            ModIso phi1{base_change(p, sq.i1), base_change(q, sq.i1), top, top.transpose()};
            ModIso phi2{base_change(p, sq.i2), base_change(q, sq.i2), sq.A2.mul(top, u.inverse),
                        sq.A2.mul(u.matrix, top.transpose())};
            REQUIRE(iso_holds(phi1));
            REQUIRE(iso_holds(phi2));
            GlueTrace trace{identity_iso(q), std::nullopt, identity_iso(q)};
            auto iso = glue_iso(sq, p, q, phi1, phi2, section_aut_lifter(sq), &trace);
            CHECK(iso_holds(iso));
            CHECK(sq.A.mul(iso.backward, iso.forward) == p.idempotent());
            // the mismatch is σ⁻¹
            CHECK(trace.alpha0.forward == sq.A0.normal_form(sigma.inverse));
            CHECK(sq.i1.apply(iso.forward) == phi1.forward);
        }
    }
}

TEST_CASE("glue_iso without mismatch, and lifter contract")
{
    auto sq = two_points();
    auto ctx = sq.A.context();
    auto q = ProjModule::free(sq.A, 2);
    auto q1 = base_change(q, sq.i1);
    auto q2 = base_change(q, sq.i2);
    auto iso = glue_iso(sq, q, q, identity_iso(q1), identity_iso(q2), section_aut_lifter(sq));
    CHECK(iso.forward.is_identity());

    auto swap = mat(ctx, 2, 2, {"0", "1", "1", "0"});
    ModIso s2{q2, q2, swap, swap};
    auto bad = [](const ModIso&, const ProjModule& over) {
        return ModIso{over, over, over.idempotent(), over.idempotent()};
    };
    CHECK_THROWS_AS(glue_iso(sq, q, q, identity_iso(q1), s2, bad), LifterContractError);
    auto ok = glue_iso(sq, q, q, identity_iso(q1), s2, section_aut_lifter(sq));
    CHECK(iso_holds(ok));
}

TEST_CASE("paired automorphisms")
{
    auto sq = two_points();
    auto ctx = sq.A.context();
    auto p = ProjModule::free(sq.A, 2);
    auto p1 = base_change(p, sq.i1);
    auto id = pair_aut(sq, p, identity_iso(p1), section_aut_lifter(sq));
    CHECK(id.forward.is_identity());

    auto c = mat(ctx, 2, 2, {"2", "1", "1", "1"});
    auto cinv = mat(ctx, 2, 2, {"1", "-1", "-1", "2"});
    auto a = pair_aut(sq, p, ModIso{p1, p1, c, cinv}, section_aut_lifter(sq));
    CHECK(a.forward == c);

    // unitriangular over A1 = k[x1]; j1 kills nothing but x0, so the section lift lands in A2
    auto g = mat(ctx, 2, 2, {"1", "x1^2 - 1", "0", "1"});
    auto ginv = mat(ctx, 2, 2, {"1", "1 - x1^2", "0", "1"});
    a = pair_aut(sq, p, ModIso{p1, p1, g, ginv}, section_aut_lifter(sq));
    CHECK(iso_holds(a));
    CHECK(sq.i1.apply(a.forward) == g);
    CHECK(sq.i2.apply(a.forward) == sq.section.apply(sq.j1.apply(g)));
}

TEST_CASE("paired unimodular elements")
{
    auto sq = hollow();
    auto ctx = sq.A.context();
    auto p = ProjModule::free(sq.A, 2);
    auto p1 = base_change(p, sq.i1);
    UmElement e1{p1, mat(ctx, 2, 1, {"1", "0"}), mat(ctx, 1, 2, {"1", "0"})};
    auto u = pair_um(sq, p, e1, section_um_lifter(sq));
    CHECK(u.element == mat(ctx, 2, 1, {"1", "0"}));

    // roundtrip from an element over A
    auto g = mat(ctx, 2, 2, {"1", "x0*x1 + x2", "0", "1"});
    auto ginv = mat(ctx, 2, 2, {"1", "-x0*x1 - x2", "0", "1"});
    UmElement full{p, sq.A.normal_form(g.block(0, 1, 2, 1)), sq.A.normal_form(ginv.block(1, 0, 1, 2))};
    REQUIRE(um_element_holds(full));
    UmElement restricted{p1, sq.i1.apply(full.element), sq.i1.apply(full.functional)};
    auto glued = pair_um(sq, p, restricted, [&](const UmElement&, const ProjModule& over) {
        return UmElement{over, sq.i2.apply(full.element), sq.i2.apply(full.functional)};
    });
    CHECK(um_element_holds(glued));
    CHECK(sq.i1.apply(glued.element) == restricted.element);
    CHECK(glued.element == full.element);
}
