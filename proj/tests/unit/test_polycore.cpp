#include "doctest.h"

#include "srpb/errors.hpp"
#include "srpb/polycore/smith.hpp"
#include "../support.hpp"

using namespace srpb;
using namespace srpb::testing;

TEST_CASE("scalars over Q and F_p")
{
    auto q = Field::rationals();
    Scalar a(q, mpq_class(6, 4));
    CHECK(a.to_string() == "3/2");
    CHECK((a * a.inverse()).is_one());

    auto f7 = Field::prime(7);
    Scalar b(f7, -1L);
    CHECK(b.value() == 6);
    CHECK((Scalar(f7, 3L) * Scalar(f7, 5L)).value() == 1);
    CHECK(Scalar(f7, mpq_class(1, 2)).value() == 4);
    CHECK_THROWS_AS(Field::prime(9), InputError);
    CHECK_THROWS_AS(Scalar(q, 1L) + b, ContextError);
    CHECK(Field::parse("Fp:5").characteristic() == 5);
    CHECK_THROWS_AS(Field::parse("R"), InputError);
}

TEST_CASE("grevlex compares degree first, then the last variable")
{
    auto order = TermOrder::grevlex(3);
    Monomial x0x2({1, 0, 1}), x1sq({0, 2, 0}), x0cube({3, 0, 0});
    CHECK(order.compare(x0cube, x1sq) > 0);
    // same degree: the one with the smaller last exponent is larger
    CHECK(order.compare(x1sq, x0x2) > 0);
    auto lex = TermOrder::lex(3);
    CHECK(lex.compare(x0x2, x1sq) > 0);
}

TEST_CASE("ring operations")
{
    auto ctx = vars(2);
    CHECK(poly(ctx, "(x0+1) + (x0-1)") == poly(ctx, "2*x0"));
    // schoolbook expansion, written out by hand
    auto prod = poly(ctx, "x0+x1") * poly(ctx, "x0-x1");
    Polynomial expect(ctx);
    expect += Polynomial::term(ctx, Scalar(ctx->field, 1L), Monomial({2, 0}));
    expect -= Polynomial::term(ctx, Scalar(ctx->field, 1L), Monomial({0, 2}));
    CHECK(prod == expect);
    CHECK(prod.to_string() == "x0^2 - x1^2");

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto f = random_poly(rng, ctx, 3, 4);
        auto g = random_poly(rng, ctx, 3, 4);
        auto h = random_poly(rng, ctx, 3, 4);
        CHECK(f * Polynomial::constant(ctx, 1) == f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * (g + h) == f * g + f * h);
        auto r = f * g;
        for (std::size_t k = 1; k < r.terms().size(); ++k)
            CHECK(ctx->order.compare(r.terms()[k - 1].mono, r.terms()[k].mono) > 0);
        for (const auto& t : r.terms())
            CHECK(!t.coeff.is_zero());
    }
    CHECK_THROWS_AS(poly(ctx, "x0") + poly(vars(3), "x0"), ContextError);
}

TEST_CASE("substitution")
{
    auto ctx = vars(2);
    CHECK(substitute(poly(ctx, "x0^2 + x1"), {{0, Polynomial(ctx)}}) == poly(ctx, "x1"));
    CHECK(substitute(poly(ctx, "x0*x1"), {{0, poly(ctx, "x1")}}) == poly(ctx, "x1^2"));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        auto f = random_poly(rng, ctx, 3, 4);
        auto g = random_poly(rng, ctx, 3, 4);
        CHECK(substitute(f, std::map<std::size_t, Polynomial>{}) == f);
        std::map<std::size_t, Polynomial> a{{0, poly(ctx, "x1 - 2")}, {1, poly(ctx, "x0*x1")}};
        CHECK(substitute(f * g, a) == substitute(f, a) * substitute(g, a));
    }
}

TEST_CASE("expression grammar")
{
    auto ctx = vars(3);
    auto f = poly(ctx, "x0*x1 + 1");
    CHECK(f.terms().size() == 2);
    CHECK(f.to_string() == "x0*x1 + 1");
    // binomial expansion oracle for (x0+x1)^2
    Polynomial sq(ctx);
    const long binom[] = {1, 2, 1};
    for (std::uint32_t k = 0; k <= 2; ++k)
        sq += Polynomial::term(ctx, Scalar(ctx->field, binom[k]), Monomial({2 - k, k, 0}));
    CHECK(poly(ctx, "(x0+x1)^2") == sq);
    CHECK(poly(ctx, "-x0^2") == -poly(ctx, "x0*x0"));
    CHECK(poly(ctx, " 1/2 * x2 ") == poly(ctx, "x2*3/6"));
    CHECK(poly(ctx, "2-3-4") == poly(ctx, "-5"));

    try {
        poly(ctx, "x0 + ");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(poly(ctx, "x0^4294967296"), ParseError);
    CHECK_THROWS_AS(poly(ctx, "x5"), ParseError);
    CHECK_THROWS_AS(poly(ctx, "(x0"), ParseError);
    CHECK_THROWS_AS(poly(ctx, "1/0"), ParseError);
    CHECK_THROWS_AS(poly(vars(1, Field::prime(5)), "1/5"), ParseError);
    CHECK(poly(vars(1, Field::prime(5)), "1/2") == poly(vars(1, Field::prime(5)), "3"));
}

TEST_CASE("determinant and adjugate")
{
    auto ctx = vars(2);
    CHECK(determinant(PolyMatrix::identity(ctx, 3)).is_one());
    CHECK(determinant(mat(ctx, 2, 2, {"1", "x0", "0", "1"})).is_one());
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto m = random_matrix(rng, ctx, 3, 3, 2);
        auto d = determinant(m);
        CHECK(d == leibniz_det(m));
        auto lhs = m * adjugate(m);
        CHECK(lhs == scale(PolyMatrix::identity(ctx, 3), d));
        auto n = random_matrix(rng, ctx, 3, 3, 1);
        CHECK(determinant(m * n) == d * determinant(n));
    }
    CHECK_THROWS_AS(mat(ctx, 1, 2, {"1", "2"}) * mat(ctx, 1, 2, {"1", "2"}), ShapeError);
    CHECK_THROWS_AS(determinant(mat(ctx, 1, 2, {"1", "2"})), ShapeError);
}

TEST_CASE("univariate division and gcd")
{
    auto ctx = vars(1);
    auto [q, r] = divmod_univariate(poly(ctx, "x0^3 + 2*x0 + 1"), poly(ctx, "x0^2 + 1"));
    CHECK(q == poly(ctx, "x0"));
    CHECK(r == poly(ctx, "x0 + 1"));
    CHECK(gcd_univariate(poly(ctx, "x0^2 - 1"), poly(ctx, "2*x0 + 2")) == poly(ctx, "x0 + 1"));
}

namespace {

void check_smith(const PolyMatrix& m, const SmithForm& s)
{
    CHECK(s.U * m * s.V == s.D);
    CHECK((s.U * s.U_inv).is_identity());
    CHECK((s.V * s.V_inv).is_identity());
    auto du = determinant(s.U), dv = determinant(s.V);
    CHECK((du.is_constant() && !du.is_zero()));
    CHECK((dv.is_constant() && !dv.is_zero()));
    const auto k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                CHECK(s.D(i, j).is_zero());
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const auto& a = s.D(i, i);
        const auto& b = s.D(i + 1, i + 1);
        if (a.is_zero()) {
            CHECK(b.is_zero());
            continue;
        }
        CHECK(a.lead().coeff.is_one());
        CHECK(divmod_univariate(b, a).second.is_zero());
    }
}

} // namespace

TEST_CASE("Smith normal form")
{
    auto ctx = vars(2);
    auto dt = mat(ctx, 2, 2, {"x0", "0", "0", "x0^2"});
    auto s = smith_normal_form(dt);
    CHECK(s.D == dt);
    CHECK(s.U.is_identity());
    CHECK(s.V.is_identity());

    auto jordan = mat(ctx, 2, 2, {"x0", "1", "0", "x0"});
    s = smith_normal_form(jordan);
    CHECK(s.D == mat(ctx, 2, 2, {"1", "0", "0", "x0^2"}));
    check_smith(jordan, s);

    PolyMatrix zero(ctx, 2, 3);
    s = smith_normal_form(zero);
    CHECK(s.D.is_zero());
    CHECK(s.U.is_identity());
    CHECK(s.V.is_identity());

    CHECK_THROWS_AS(smith_normal_form(mat(ctx, 1, 2, {"x0", "x1"})), UnsupportedRingError);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<std::size_t> size(1, 4);
        auto m = random_matrix(rng, ctx, size(rng), size(rng), 3, 0b10);
        check_smith(m, smith_normal_form(m));
    }
}
