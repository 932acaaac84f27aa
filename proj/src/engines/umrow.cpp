#include "srpb/engines/engines.hpp"

#include "internal.hpp"

namespace srpb {

namespace {

PolyMatrix at_origin(const PolyMatrix& m)
{
    std::vector<Polynomial> zeros(m.context()->nvars, Polynomial(m.context()));
    return substitute(m, zeros);
}

PolyMatrix rank_projector(const ContextPtr& ctx, std::size_t size, std::size_t r)
{
    PolyMatrix p(ctx, size, size);
    for (std::size_t i = 0; i < r; ++i)
        p(i, i) = Polynomial::constant(ctx, 1);
    return p;
}

} // namespace

UmLiftResult umrow_lift(const UmRow& v, const RingHom& pi, const ExtendOracle& oracle,
                        std::span<const LiftStrategy> strategies)
{
    const auto& T = v.ring;
    const auto& R = pi.source();
    if (!(pi.target() == T))
        throw PreconditionError("row does not live in the target of the lift map");
    if (!um_holds(v))
        throw PreconditionError("row certificate does not verify");
    if (!T.is_square_free())
        throw PreconditionError("ring " + T.describe() + " is not a Stanley-Reisner ring");
    const auto r = v.v.cols();

    CertBuilder cb;
    UmLiftResult result;
    json root = CertBuilder::node("lift", "unimodular row lift");
    auto profile = HypothesisProfile::of(T.field(), r).to_json();
    auto finish = [&](const char* failure = nullptr) {
        result.certificate =
            cb.document("umrow", root, detail::obligations_json(cb, result.obligations), profile);
        if (failure) {
            result.certificate["failure"] = failure;
            result.certificate["status"] = "partial";
        }
        return result;
    };

    root["claims"].push_back(cb.unimodular(T, v.v, v.w));
    auto p = kernel_module(v);
    root["claims"].push_back(cb.idempotent(p));
    root["claims"].push_back(cb.linear(T,
                                       {{1, {LinearFactor::of(T, T.identity(r))}},
                                        {-1, {LinearFactor::of(T, v.w, true), LinearFactor::of(T, v.v)}}},
                                       p.idempotent()));
    auto aug = RingHom::augmentation(T);
    auto v0 = at_origin(v.v), w0 = at_origin(v.w);
    root["claims"].push_back(cb.image(aug, v.v, v0));
    root["claims"].push_back(cb.image(aug, v.w, w0));

    json ext;
    auto phi = detail::extend_into(p, oracle, cb, result.obligations, ext);
    root["children"].push_back(ext);
    if (!phi)
        return finish("kernel module has unresolved extension obligations");

    const auto& e = p.idempotent();
    const auto& e0 = phi->target.idempotent();
    Invertible sigma{T.normal_form(T.mul(phi->backward, e0) + T.mul(v.w.transpose(), v0)),
                     T.normal_form(T.mul(phi->forward, e) + T.mul(w0.transpose(), v.v))};
    root["claims"].push_back(cb.linear(T,
                                       {{1, {LinearFactor::of(T, phi->backward), LinearFactor::of(T, e0)}},
                                        {1, {LinearFactor::of(T, v.w, true), LinearFactor::of(T, v0)}}},
                                       sigma.matrix));
    root["claims"].push_back(cb.linear(T,
                                       {{1, {LinearFactor::of(T, phi->forward), LinearFactor::of(T, e)}},
                                        {1, {LinearFactor::of(T, w0, true), LinearFactor::of(T, v.v)}}},
                                       sigma.inverse));
    root["claims"].push_back(cb.inverse(T, sigma.matrix, sigma.inverse));
    root["claims"].push_back(cb.linear(T, {{1, {LinearFactor::of(T, v.v), LinearFactor::of(T, sigma.matrix)}}}, v0));
    if (!is_inverse_pair(T, sigma.matrix, sigma.inverse))
        throw InternalError("row transport matrix is not invertible");
    if (!(T.mul(v.v, sigma.matrix) == T.normal_form(v0)))
        throw InternalError("row transport matrix does not carry v to v(0)");

    result.gl = lift_gl(sigma, pi, strategies);
    if (!result.gl->ok()) {
        json failed = CertBuilder::node("lift", "GL lift: all strategies failed");
        failed["diagnostics"] = result.gl->diagnostics();
        root["children"].push_back(failed);
        return finish("GL lift strategies exhausted");
    }
    const auto& delta = *result.gl->lift;
    json lift = CertBuilder::node("lift", "GL lift via " + to_string(*result.gl->used));
    lift["claims"].push_back(cb.gl_lift(pi, sigma, delta));
    root["children"].push_back(lift);

    auto u = R.mul(v0, delta.inverse);
    auto w = R.mul(w0, delta.matrix.transpose());
    root["claims"].push_back(cb.linear(R, {{1, {LinearFactor::of(R, v0), LinearFactor::of(R, delta.inverse)}}}, u));
    root["claims"].push_back(
        cb.linear(R, {{1, {LinearFactor::of(R, w0), LinearFactor::of(R, delta.matrix, true)}}}, w));
    root["claims"].push_back(cb.unimodular(R, u, w));
    root["claims"].push_back(cb.congruence(pi, u, v.v));
    UmRow lifted{R, u, w};
    if (!um_holds(lifted))
        throw InternalError("lifted row certificate does not verify");
    if (!(pi.apply(u) == T.normal_form(v.v)))
        throw InternalError("lifted row is not congruent to the input");
    result.lifted = lifted;
    return finish();
}

json patch_certificate(const FiberSquare& square, const Invertible& sigma, const ProjModule& patched)
{
    CertBuilder cb;
    const auto r = sigma.matrix.rows();
    auto u = whitehead_lift(sigma, square.j2, square.section);
    auto proj = rank_projector(square.A.context(), 2 * r, r);
    auto e2 = square.A2.mul(square.A2.mul(u.matrix, proj), u.inverse);
    json root = CertBuilder::node("glue", "Milnor patch");
    root["claims"].push_back(cb.square_claim(square));
    root["claims"].push_back(cb.inverse(square.A0, sigma.matrix, sigma.inverse));
    root["claims"].push_back(cb.whitehead(square, sigma, u));
    root["claims"].push_back(cb.linear(square.A2,
                                       {{1,
                                         {LinearFactor::of(square.A2, u.matrix), LinearFactor::of(square.A2, proj),
                                          LinearFactor::of(square.A2, u.inverse)}}},
                                       e2));
    for (auto& c : cb.glue_claims(square, proj, e2, patched.idempotent()))
        root["claims"].push_back(c);
    root["claims"].push_back(cb.idempotent(patched));
    return cb.document("patch", root, json::array(), HypothesisProfile::of(square.A.field(), r).to_json());
}

json gl_lift_certificate(const RingHom& pi, const Invertible& sigma, const GLLiftResult& result)
{
    CertBuilder cb;
    json root = CertBuilder::node("lift", result.ok() ? "GL lift via " + to_string(*result.used) : "GL lift");
    root["claims"].push_back(cb.inverse(pi.target(), sigma.matrix, sigma.inverse));
    if (result.ok())
        root["claims"].push_back(cb.gl_lift(pi, sigma, *result.lift));
    else
        root["diagnostics"] = result.diagnostics();
    auto doc = cb.document("gl_lift", root, json::array(), json());
    if (!result.ok()) {
        doc["failure"] = "GL lift strategies exhausted";
        doc["status"] = "partial";
    }
    return doc;
}

} // namespace srpb
