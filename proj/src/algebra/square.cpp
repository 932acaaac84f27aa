#include "srpb/quotient/square.hpp"

#include <functional>

namespace srpb {

FiberSquare build_vorst_square(Field field, const SimplicialComplex& sigma)
{
    return build_vorst_square(make_context(field, sigma.ambient()), sigma);
}

FiberSquare build_vorst_square(ContextPtr ctx, const SimplicialComplex& sigma)
{
    auto d = vorst_decompose(sigma);
    auto cone2 = cone(d.sigma2, d.apex);
    auto A = QuotientRing::stanley_reisner(ctx, sigma);
    auto A1 = QuotientRing::stanley_reisner(ctx, d.sigma1);
    auto A2 = QuotientRing::stanley_reisner(ctx, cone2);
    auto A0 = QuotientRing::stanley_reisner(ctx, d.sigma2);
    const VertexSet apex = VertexSet{1} << d.apex;
    FiberSquare square{sigma,
                       d.sigma1,
                       d.sigma2,
                       d.apex,
                       A,
                       A1,
                       A2,
                       A0,
                       hom_check(RingHom::natural(A, A1)),
                       hom_check(RingHom::natural(A, A2)),
                       hom_check(RingHom::natural(A1, A0)),
                       hom_check(RingHom::killing(A2, A0, apex)),
                       hom_check(RingHom::killing(A0, A2, apex))};
    if (!square_commutes(square))
        throw InternalError("Vorst square does not commute");
    if (!section_splits(square))
        throw InternalError("section does not split j2");
    return square;
}

bool square_commutes(const FiberSquare& s)
{
    for (std::size_t v = 0; v < s.A.nvars(); ++v) {
        auto x = s.A.variable(v);
        if (!(s.j1.apply(s.i1.apply(x)) == s.j2.apply(s.i2.apply(x))))
            return false;
    }
    return true;
}

bool section_splits(const FiberSquare& s)
{
    for (std::size_t v = 0; v < s.A0.nvars(); ++v) {
        auto x = s.A0.variable(v);
        if (!(s.j2.apply(s.section.apply(x)) == x))
            return false;
    }
    return true;
}

FiberReport fiber_check(const FiberSquare& s, std::size_t degree)
{
    FiberReport report;
    report.degree = degree;
    const auto n = s.A.nvars();
    Monomial m(n);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t var, std::size_t budget) {
        if (!report.ok)
            return;
        if (var == n) {
            bool a = s.A.survives(m);
            bool a1 = s.A1.survives(m);
            bool a2 = s.A2.survives(m);
            bool a0 = s.A0.survives(m);
            report.basis_a += a;
            report.basis_a1 += a1;
            report.basis_a2 += a2;
            report.basis_a0 += a0;
            if (a != (a1 || a2) || (a1 && a2) != a0) {
                report.ok = false;
                report.failure = Polynomial::term(s.A.context(), Scalar::one(s.A.field()), m).to_string();
            }
            return;
        }
        for (std::size_t e = 0; e <= budget; ++e) {
            m[var] = static_cast<std::uint32_t>(e);
            walk(var + 1, budget - e);
        }
        m[var] = 0;
    };
    walk(0, degree);
    if (report.ok && report.basis_a + report.basis_a0 != report.basis_a1 + report.basis_a2) {
        report.ok = false;
        report.failure = "basis count identity";
    }
    return report;
}

Polynomial glue(const FiberSquare& s, const Polynomial& a1, const Polynomial& a2)
{
    auto common = s.j1.apply(a1);
    if (!(common == s.j2.apply(a2)))
        throw InternalError("glue of incompatible pair: j1(a1) = " + common.to_string() +
                            ", j2(a2) = " + s.j2.apply(a2).to_string());
    // Normal forms of A1, A2 and A0 are normal forms of A, so the representatives add directly.
    auto a = s.A.normal_form(a1 + a2 - common);
    if (!(s.i1.apply(a) == a1) || !(s.i2.apply(a) == a2))
        throw InternalError("glued element does not restrict to its parts");
    return a;
}

PolyMatrix glue(const FiberSquare& s, const PolyMatrix& m1, const PolyMatrix& m2)
{
    if (m1.rows() != m2.rows() || m1.cols() != m2.cols())
        throw ShapeError("glue of matrices with different shapes");
    PolyMatrix out(s.A.context(), m1.rows(), m1.cols());
    for (std::size_t i = 0; i < m1.rows(); ++i)
        for (std::size_t j = 0; j < m1.cols(); ++j)
            out(i, j) = glue(s, m1(i, j), m2(i, j));
    return out;
}

} // namespace srpb
