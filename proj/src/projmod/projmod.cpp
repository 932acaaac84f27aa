#include "srpb/projmod.hpp"

#include "srpb/groebner.hpp"

namespace srpb {

namespace {

PolyMatrix rank_projector(const ContextPtr& ctx, std::size_t size, std::size_t r)
{
    PolyMatrix p(ctx, size, size);
    for (std::size_t i = 0; i < r; ++i)
        p(i, i) = Polynomial::constant(ctx, 1);
    return p;
}

RingHom checked(const RingHom& h)
{
    return h.verified() ? h : hom_check(h);
}

} // namespace

ProjModule::ProjModule(QuotientRing ring, PolyMatrix e) : ring_(std::move(ring)), e_(ring_.normal_form(e))
{
    if (!e_.is_square())
        throw ShapeError("idempotent must be square");
    if (!(ring_.mul(e_, e_) == e_))
        throw PreconditionError("matrix is not idempotent over " + ring_.describe());
}

ProjModule ProjModule::free(const QuotientRing& ring, std::size_t rank)
{
    return ProjModule(ring, ring.identity(rank));
}

std::size_t rank(const ProjModule& p)
{
    const auto& e = p.idempotent();
    Polynomial trace(p.ring().context());
    for (std::size_t i = 0; i < e.rows(); ++i)
        trace += e(i, i);
    auto t = trace.constant_term();
    if (!t.is_integer() || t.value() < 0 || t.value() > static_cast<long>(p.size()))
        throw RankUndefinedError("augmented trace " + t.to_string() + " is not a rank");
    return static_cast<std::size_t>(t.value().get_num().get_ui());
}

ProjModule base_change(const ProjModule& p, const RingHom& h)
{
    if (!(h.source() == p.ring()))
        throw PreconditionError("base change along a map from a different ring");
    auto hc = checked(h);
    try {
        return ProjModule(hc.target(), hc.apply(p.idempotent()));
    } catch (const PreconditionError&) {
        throw InternalError("base change of an idempotent is not idempotent");
    }
}

bool iso_holds(const ModIso& iso)
{
    const auto& s = iso.source;
    const auto& t = iso.target;
    const auto& ring = s.ring();
    if (!(ring == t.ring()))
        return false;
    const auto& f = iso.forward;
    const auto& b = iso.backward;
    if (f.rows() != t.size() || f.cols() != s.size() || b.rows() != s.size() || b.cols() != t.size())
        return false;
    const auto& es = s.idempotent();
    const auto& et = t.idempotent();
    return is_normal(ring, f) && is_normal(ring, b) && ring.mul(ring.mul(et, f), es) == f &&
           ring.mul(ring.mul(es, b), et) == b && ring.mul(b, f) == es && ring.mul(f, b) == et;
}

const ModIso& assert_iso(const ModIso& iso, const char* what)
{
    if (!iso_holds(iso))
        throw InternalError(std::string(what) + " does not satisfy the isomorphism laws");
    return iso;
}

ModIso identity_iso(const ProjModule& p)
{
    return {p, p, p.idempotent(), p.idempotent()};
}

ModIso inverse(const ModIso& iso)
{
    return {iso.target, iso.source, iso.backward, iso.forward};
}

ModIso compose(const ModIso& g, const ModIso& f)
{
    if (!(f.target == g.source))
        throw PreconditionError("composition of non-matching isomorphisms");
    const auto& ring = f.source.ring();
    return {f.source, g.target, ring.mul(g.forward, f.forward), ring.mul(f.backward, g.backward)};
}

ModIso base_change(const ModIso& iso, const RingHom& h)
{
    auto hc = checked(h);
    return {base_change(iso.source, hc), base_change(iso.target, hc), hc.apply(iso.forward),
            hc.apply(iso.backward)};
}

bool um_holds(const UmRow& u)
{
    if (u.v.rows() != 1 || u.w.rows() != 1 || u.v.cols() != u.w.cols())
        return false;
    return u.ring.mul(u.v, u.w.transpose()).is_identity();
}

std::optional<UmRow> make_um_row(const QuotientRing& ring, const PolyMatrix& v)
{
    auto nv = ring.normal_form(v);
    auto w = unimodular_cert(nv, ring);
    if (!w)
        return std::nullopt;
    return UmRow{ring, nv, *w};
}

ProjModule kernel_module(const UmRow& u)
{
    if (!um_holds(u))
        throw PreconditionError("row certificate does not verify");
    const auto r = u.v.cols();
    auto e = u.ring.identity(r) - u.ring.mul(u.w.transpose(), u.v);
    ProjModule p(u.ring, e);
    if (!u.ring.mul(u.v, p.idempotent()).is_zero())
        throw InternalError("kernel idempotent is not annihilated by the row");
    return p;
}

bool um_element_holds(const UmElement& u)
{
    const auto& ring = u.module.ring();
    const auto& e = u.module.idempotent();
    const auto n = u.module.size();
    if (u.element.rows() != n || u.element.cols() != 1 || u.functional.rows() != 1 || u.functional.cols() != n)
        return false;
    return ring.mul(e, u.element) == ring.normal_form(u.element) &&
           ring.mul(u.functional, e) == ring.normal_form(u.functional) &&
           ring.mul(u.functional, u.element).is_identity();
}

ProjModule milnor_patch(const FiberSquare& square, const Invertible& sigma)
{
    const auto r = sigma.matrix.rows();
    auto u = whitehead_lift(sigma, square.j2, square.section);
    auto proj = rank_projector(square.A.context(), 2 * r, r);
    auto e2 = square.A2.mul(square.A2.mul(u.matrix, proj), u.inverse);
    auto e1 = proj;
    if (!(square.j1.apply(e1) == square.j2.apply(e2)))
        throw InternalError("patch data do not agree over A0");
    ProjModule p(square.A, glue(square, e1, e2));
    if (!(square.i1.apply(p.idempotent()) == e1) || !(square.i2.apply(p.idempotent()) == e2))
        throw InternalError("patched module does not restrict to its data");
    if (rank(p) != r)
        throw InternalError("patched module has the wrong rank");
    return p;
}

AutLifter section_aut_lifter(const FiberSquare& square)
{
    return [s = square.section](const ModIso& alpha0, const ProjModule& over) {
        return ModIso{over, over, s.apply(alpha0.forward), s.apply(alpha0.backward)};
    };
}

UmLifter section_um_lifter(const FiberSquare& square)
{
    return [s = square.section](const UmElement& u0, const ProjModule& over) {
        return UmElement{over, s.apply(u0.element), s.apply(u0.functional)};
    };
}

ModIso pair_aut(const FiberSquare& square, const ProjModule& p, const ModIso& alpha1, const AutLifter& lifter)
{
    auto p1 = base_change(p, square.i1);
    auto p2 = base_change(p, square.i2);
    if (!(alpha1.source == p1) || !(alpha1.target == p1) || !iso_holds(alpha1))
        throw PreconditionError("automorphism over A1 does not act on the restricted module");
    auto alpha0 = base_change(alpha1, square.j1);
    auto beta = lifter(alpha0, p2);
    if (!(beta.source == p2) || !(beta.target == p2) || !iso_holds(beta))
        throw LifterContractError("automorphism lifter returned a non-automorphism");
    if (!(square.j2.apply(beta.forward) == alpha0.forward) || !(square.j2.apply(beta.backward) == alpha0.backward))
        throw LifterContractError("automorphism lifter output does not reduce to its input");
    ModIso out{p, p, glue(square, alpha1.forward, beta.forward), glue(square, alpha1.backward, beta.backward)};
    return assert_iso(out, "paired automorphism");
}

ModIso glue_iso(const FiberSquare& square, const ProjModule& p, const ProjModule& q, const ModIso& phi1,
                const ModIso& phi2, const AutLifter& lifter, GlueTrace* trace)
{
    auto q2 = base_change(q, square.i2);
    if (!(phi1.source == base_change(p, square.i1)) || !(phi1.target == base_change(q, square.i1)) ||
        !(phi2.source == base_change(p, square.i2)) || !(phi2.target == q2))
        throw PreconditionError("isomorphisms do not match the restricted modules");
    if (!iso_holds(phi1) || !iso_holds(phi2))
        throw PreconditionError("isomorphism to glue does not verify");
    const auto& a0 = square.A0;
    const auto& a2 = square.A2;
    auto q0 = base_change(q2, square.j2);
    ModIso alpha0{q0, q0, a0.mul(square.j2.apply(phi2.forward), square.j1.apply(phi1.backward)),
                  a0.mul(square.j1.apply(phi1.forward), square.j2.apply(phi2.backward))};
    assert_iso(alpha0, "mismatch automorphism");
    ModIso fixed = phi2;
    std::optional<ModIso> lifted;
    if (!(alpha0.forward == q0.idempotent())) {
        auto beta = lifter(alpha0, q2);
        if (!(beta.source == q2) || !(beta.target == q2) || !iso_holds(beta))
            throw LifterContractError("automorphism lifter returned a non-automorphism");
        if (!(square.j2.apply(beta.forward) == alpha0.forward) ||
            !(square.j2.apply(beta.backward) == alpha0.backward))
            throw LifterContractError("automorphism lifter output does not reduce to its input");
        fixed.forward = a2.mul(beta.backward, phi2.forward);
        fixed.backward = a2.mul(phi2.backward, beta.forward);
        assert_iso(fixed, "corrected isomorphism over A2");
        lifted = std::move(beta);
    }
    ModIso out{p, q, glue(square, phi1.forward, fixed.forward), glue(square, phi1.backward, fixed.backward)};
    assert_iso(out, "glued isomorphism");
    if (trace)
        *trace = GlueTrace{alpha0, lifted, fixed};
    return out;
}

UmElement pair_um(const FiberSquare& square, const ProjModule& p, const UmElement& u1, const UmLifter& lifter)
{
    auto p2 = base_change(p, square.i2);
    if (!(u1.module == base_change(p, square.i1)) || !um_element_holds(u1))
        throw PreconditionError("unimodular element over A1 does not verify");
    UmElement u0{base_change(u1.module, square.j1), square.j1.apply(u1.element), square.j1.apply(u1.functional)};
    auto u2 = lifter(u0, p2);
    if (!(u2.module == p2) || !um_element_holds(u2))
        throw LifterContractError("unimodular lifter returned a non-unimodular element");
    if (!(square.j2.apply(u2.element) == u0.element) || !(square.j2.apply(u2.functional) == u0.functional))
        throw LifterContractError("unimodular lifter output does not reduce to its input");
    UmElement out{p, glue(square, u1.element, u2.element), glue(square, u1.functional, u2.functional)};
    if (!um_element_holds(out))
        throw InternalError("paired unimodular element does not verify");
    return out;
}

} // namespace srpb
