#include "srpb/engines/engines.hpp"

#include "internal.hpp"

#include <bit>

#include "srpb/polycore/smith.hpp"

namespace srpb {

std::string to_string(ObligationKind kind)
{
    switch (kind) {
    case ObligationKind::extend:
        return "extend";
    case ObligationKind::stable_extend:
        return "stable-extend";
    case ObligationKind::cancel:
        return "cancel";
    }
    return "unknown";
}

namespace {

PolyMatrix at_origin(const PolyMatrix& m)
{
    std::vector<Polynomial> zeros(m.context()->nvars, Polynomial(m.context()));
    return substitute(m, zeros);
}

ProjModule augmented(const ProjModule& p)
{
    return ProjModule(p.ring(), at_origin(p.idempotent()));
}

// Columns at which the rank of a constant matrix grows, left to right.
std::vector<std::size_t> pivot_columns(const PolyMatrix& m)
{
    std::vector<std::vector<Scalar>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i].push_back(m(i, j).constant_term());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && a[p][col].is_zero())
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[row]);
        auto inv = a[row][col].inverse();
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (a[i][col].is_zero())
                continue;
            auto f = a[i][col] * inv;
            for (std::size_t j = col; j < m.cols(); ++j)
                a[i][j] = a[i][j] - f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// For a constant idempotent E: E = B·L with L·B = I, B a column basis of im E.
std::pair<PolyMatrix, PolyMatrix> split_constant(const ProjModule& p)
{
    const auto& ring = p.ring();
    const auto& e = p.idempotent();
    auto cols = pivot_columns(e);
    const auto n = e.rows();
    const auto s = cols.size();
    PolyMatrix b(ring.context(), n, s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < s; ++k)
            b(i, k) = e(i, cols[k]);
    auto rows = pivot_columns(b.transpose());
    PolyMatrix br(ring.context(), s, s), er(ring.context(), s, n);
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t j = 0; j < s; ++j)
            br(k, j) = b(rows[k], j);
        for (std::size_t j = 0; j < n; ++j)
            er(k, j) = e(rows[k], j);
    }
    auto inv = det_unit_inverse(br, ring);
    if (!inv.ok())
        throw InternalError("pivot block of a constant idempotent is singular");
    auto l = ring.mul(*inv.inverse, er);
    if (!(ring.mul(b, l) == e) || !ring.mul(l, b).is_identity())
        throw InternalError("constant idempotent does not split through its column basis");
    return {b, l};
}

} // namespace

OracleAnswer no_oracle(const ProjModule& p)
{
    return {std::nullopt, "no oracle for " + p.ring().describe(), ObligationKind::extend};
}

OracleAnswer builtin_oracle(const ProjModule& p)
{
    const auto& ring = p.ring();
    const auto& e = p.idempotent();
    if (e.is_constant())
        return {identity_iso(p), {}, ObligationKind::extend};
    if (!ring.is_polynomial_ring() || std::popcount(ring.live_variables()) != 1)
        return {std::nullopt, "no built-in witness over " + ring.describe(), ObligationKind::extend};
    auto snf = smith_normal_form(e);
    const auto n = e.rows();
    std::size_t s = 0;
    while (s < n && !snf.D(s, s).is_zero()) {
        if (!snf.D(s, s).is_one())
            throw InternalError("idempotent has a non-unit invariant factor");
        ++s;
    }
    auto b = snf.U_inv.block(0, 0, n, s);
    auto c = snf.V_inv.block(0, 0, s, n);
    if (!(ring.mul(b, c) == e) || !ring.mul(c, b).is_identity())
        throw InternalError("Smith factors do not split the idempotent");
    auto b0 = at_origin(b), c0 = at_origin(c);
    ModIso iso{p, augmented(p), ring.mul(b0, c), ring.mul(b, c0)};
    assert_iso(iso, "Smith-form extension witness");
    return {iso, {}, ObligationKind::extend};
}

ExtendOracle stable_adapter(StableOracle base)
{
    return [base = std::move(base)](const ProjModule& p) {
        if (p.idempotent().is_constant())
            return OracleAnswer{identity_iso(p), {}, ObligationKind::stable_extend};
        OracleAnswer a = base ? base(p) : no_oracle(p);
        a.kind = ObligationKind::stable_extend;
        return a;
    };
}

std::optional<ModIso> constant_iso(const ProjModule& p, const ProjModule& q)
{
    if (!(p.ring() == q.ring()))
        throw PreconditionError("constant iso across different rings");
    if (!p.idempotent().is_constant() || !q.idempotent().is_constant())
        return std::nullopt;
    auto [bp, lp] = split_constant(p);
    auto [bq, lq] = split_constant(q);
    if (bp.cols() != bq.cols())
        return std::nullopt;
    const auto& ring = p.ring();
    ModIso iso{p, q, ring.mul(bq, lp), ring.mul(bp, lq)};
    return assert_iso(iso, "constant isomorphism");
}

HypothesisProfile HypothesisProfile::of(const Field& field, std::size_t rank)
{
    HypothesisProfile h;
    h.characteristic = field.characteristic();
    h.rank = rank;
    h.dimension = 0;
    // a prime p divides r! iff p ≤ r; characteristic 0 is not finite characteristic
    h.char_prime_to_rank_factorial = h.characteristic != 0 && h.characteristic > rank;
    h.rank_at_least_half_dim_plus_two = 2 * rank >= h.dimension + 4;
    return h;
}

json HypothesisProfile::to_json() const
{
    return {{"characteristic", characteristic},
            {"rank", rank},
            {"dimension", dimension},
            {"char_prime_to_rank_factorial", char_prime_to_rank_factorial},
            {"rank_at_least_half_dim_plus_two", rank_at_least_half_dim_plus_two},
            {"advisory", true}};
}

namespace {

void add_claim(json& node, json claim)
{
    node["claims"].push_back(std::move(claim));
}

void add_claims(json& node, const std::vector<json>& claims)
{
    for (const auto& c : claims)
        node["claims"].push_back(c);
}

json obligation_json(CertBuilder& cb, const Obligation& o)
{
    return {{"kind", to_string(o.kind)},
            {"ring", cb.ring(o.ring)},
            {"module", cb.matrix(o.ring, o.module.idempotent())},
            {"detail", o.detail}};
}

// Claims for glue_iso: the mismatch, its lift, the corrected iso over A2 and the glued result.
json glue_node(CertBuilder& cb, const FiberSquare& sq, const ModIso& phi1, const ModIso& phi2, const GlueTrace& t,
               const ModIso& result)
{
    auto node = CertBuilder::node("glue", "apex " + std::to_string(sq.apex));
    const auto& a0 = t.alpha0;
    add_claim(node, cb.iso(a0));
    add_claim(node, cb.linear(sq.A0,
                              {{1, {LinearFactor::through(sq.j2, phi2.forward),
                                    LinearFactor::through(sq.j1, phi1.backward)}}},
                              a0.forward));
    add_claim(node, cb.linear(sq.A0,
                              {{1, {LinearFactor::through(sq.j1, phi1.forward),
                                    LinearFactor::through(sq.j2, phi2.backward)}}},
                              a0.backward));
    if (t.beta) {
        const auto& b = *t.beta;
        add_claim(node, cb.image(sq.j2, b.forward, a0.forward));
        add_claim(node, cb.image(sq.j2, b.backward, a0.backward));
        add_claim(node, cb.iso(b));
        add_claim(node, cb.linear(sq.A2, {{1, {LinearFactor::of(sq.A2, b.backward), LinearFactor::of(sq.A2, phi2.forward)}}},
                                  t.phi2.forward));
        add_claim(node, cb.linear(sq.A2, {{1, {LinearFactor::of(sq.A2, phi2.backward), LinearFactor::of(sq.A2, b.forward)}}},
                                  t.phi2.backward));
    }
    add_claim(node, cb.iso(t.phi2));
    add_claims(node, cb.glue_claims(sq, phi1.forward, t.phi2.forward, result.forward));
    add_claims(node, cb.glue_claims(sq, phi1.backward, t.phi2.backward, result.backward));
    add_claim(node, cb.iso(result));
    return node;
}

std::size_t face_count(const SimplicialComplex& c)
{
    return c.faces().size();
}

struct ExtendRun {
    const ExtendOracle& oracle;
    CertBuilder& cb;
    std::vector<Obligation>& obligations;
    std::size_t depth_limit;

    std::optional<ModIso> run(const ProjModule& p, json& node, std::size_t depth)
    {
        if (depth > depth_limit)
            throw InternalError("extension recursion exceeded the face count");
        const auto& ring = p.ring();
        auto complex = ring.complex();
        auto q = augmented(p);
        // constant modules are extended as they stand; no need to decompose
        if (is_simplex(complex) || p.idempotent().is_constant()) {
            auto ans = builtin_oracle(p);
            std::string source = "built-in";
            if (!ans.iso && oracle) {
                ans = oracle(p);
                source = "oracle";
                if (ans.iso && (!(ans.iso->source == p) || !(ans.iso->target == q) || !iso_holds(*ans.iso)))
                    throw LifterContractError("extension oracle returned an unverified isomorphism over " +
                                              ring.describe());
            }
            if (!ans.iso) {
                node = CertBuilder::node("obligation", complex.to_string());
                add_claim(node, cb.idempotent(p));
                obligations.push_back({ans.kind, ring, p, ans.detail});
                node["obligation"] = obligations.size() - 1;
                return std::nullopt;
            }
            node = CertBuilder::node("base", complex.to_string() + " (" + source + ")");
            add_claim(node, cb.idempotent(p));
            auto aug = RingHom::augmentation(ring);
            add_claim(node, cb.image(aug, p.idempotent(), q.idempotent()));
            add_claim(node, cb.iso(*ans.iso));
            return ans.iso;
        }
        auto sq = build_vorst_square(ring.context(), complex);
        node = CertBuilder::node("decompose", "apex " + std::to_string(sq.apex) + " of " + complex.to_string());
        auto p1 = base_change(p, sq.i1);
        auto p2 = base_change(p, sq.i2);
        add_claim(node, cb.square_claim(sq));
        add_claim(node, cb.idempotent(p));
        add_claim(node, cb.image(sq.i1, p.idempotent(), p1.idempotent()));
        add_claim(node, cb.image(sq.i2, p.idempotent(), p2.idempotent()));
        json c1, c2;
        auto phi1 = run(p1, c1, depth + 1);
        auto phi2 = run(p2, c2, depth + 1);
        node["children"].push_back(c1);
        node["children"].push_back(c2);
        if (!phi1 || !phi2)
            return std::nullopt;
        GlueTrace trace{identity_iso(q), std::nullopt, *phi2};
        auto iso = glue_iso(sq, p, q, *phi1, *phi2, section_aut_lifter(sq), &trace);
        node["children"].push_back(glue_node(cb, sq, *phi1, *phi2, trace, iso));
        auto aug = RingHom::augmentation(ring);
        add_claim(node, cb.image(aug, p.idempotent(), q.idempotent()));
        add_claim(node, cb.iso(iso));
        return iso;
    }
};

void require_stanley_reisner(const QuotientRing& ring)
{
    if (!ring.is_square_free())
        throw PreconditionError("ring " + ring.describe() + " is not a Stanley-Reisner ring");
}

} // namespace

namespace detail {

std::optional<ModIso> extend_into(const ProjModule& p, const ExtendOracle& oracle, CertBuilder& cb,
                                  std::vector<Obligation>& obligations, json& node)
{
    require_stanley_reisner(p.ring());
    ExtendRun run{oracle, cb, obligations, face_count(p.ring().complex())};
    auto iso = run.run(p, node, 0);
    if (iso && !(iso->target.idempotent() == at_origin(p.idempotent())))
        throw InternalError("extension witness does not target the augmented module");
    return iso;
}

json obligations_json(CertBuilder& cb, const std::vector<Obligation>& obligations)
{
    json out = json::array();
    for (const auto& o : obligations)
        out.push_back(obligation_json(cb, o));
    return out;
}

} // namespace detail

EngineResult extend_witness(const ProjModule& p, const ExtendOracle& oracle)
{
    CertBuilder cb;
    EngineResult result;
    json root;
    result.iso = detail::extend_into(p, oracle, cb, result.obligations, root);
    result.certificate = cb.document("extend", root, detail::obligations_json(cb, result.obligations),
                                     HypothesisProfile::of(p.ring().field(), rank(p)).to_json());
    return result;
}

namespace {

struct CancelRun {
    const AutLifter& lifter;
    const CancelOracle& leaf;
    CertBuilder& cb;
    std::vector<Obligation>& obligations;
    std::size_t depth_limit;

    std::optional<ModIso> obligation(json& node, const ProjModule& p, const ProjModule& q, const std::string& why)
    {
        node = CertBuilder::node("obligation", p.ring().complex().to_string());
        add_claim(node, cb.idempotent(p));
        add_claim(node, cb.idempotent(q));
        obligations.push_back({ObligationKind::cancel, p.ring(), p, why});
        node["obligation"] = obligations.size() - 1;
        return std::nullopt;
    }

    std::optional<ModIso> run(const ProjModule& p, const ProjModule& q, const ModIso& stab, json& node,
                              std::size_t depth)
    {
        if (depth > depth_limit)
            throw InternalError("cancellation recursion exceeded the face count");
        const auto& ring = p.ring();
        auto complex = ring.complex();
        if (is_simplex(complex)) {
            std::optional<ModIso> iso;
            std::string source = "built-in";
            auto a = builtin_oracle(p);
            auto b = builtin_oracle(q);
            if (a.iso && b.iso)
                if (auto c = constant_iso(a.iso->target, b.iso->target))
                    iso = compose(inverse(*b.iso), compose(*c, *a.iso));
            if (!iso && leaf) {
                auto ans = leaf(p, q, stab);
                source = "oracle";
                if (ans.iso && (!(ans.iso->source == p) || !(ans.iso->target == q) || !iso_holds(*ans.iso)))
                    throw LifterContractError("cancellation oracle returned an unverified isomorphism");
                if (!ans.iso)
                    return obligation(node, p, q, ans.detail);
                iso = ans.iso;
            }
            if (!iso)
                return obligation(node, p, q, "no built-in cancellation over " + ring.describe());
            node = CertBuilder::node("base", complex.to_string() + " (" + source + ")");
            add_claim(node, cb.idempotent(p));
            add_claim(node, cb.idempotent(q));
            add_claim(node, cb.iso(*iso));
            return iso;
        }
        auto sq = build_vorst_square(ring.context(), complex);
        node = CertBuilder::node("decompose", "apex " + std::to_string(sq.apex) + " of " + complex.to_string());
        add_claim(node, cb.square_claim(sq));
        auto p1 = base_change(p, sq.i1), q1 = base_change(q, sq.i1);
        auto p2 = base_change(p, sq.i2), q2 = base_change(q, sq.i2);
        auto s1 = base_change(stab, sq.i1), s2 = base_change(stab, sq.i2);
        for (const auto& [h, m, mh] : {std::tuple{&sq.i1, &p, &p1}, std::tuple{&sq.i1, &q, &q1},
                                       std::tuple{&sq.i2, &p, &p2}, std::tuple{&sq.i2, &q, &q2}})
            add_claim(node, cb.image(*h, m->idempotent(), mh->idempotent()));
        json c1, c2;
        auto psi1 = run(p1, q1, s1, c1, depth + 1);
        auto psi2 = run(p2, q2, s2, c2, depth + 1);
        node["children"].push_back(c1);
        node["children"].push_back(c2);
        if (!psi1 || !psi2)
            return std::nullopt;
        GlueTrace trace{identity_iso(q), std::nullopt, *psi2};
        try {
            auto iso = glue_iso(sq, p, q, *psi1, *psi2, lifter ? lifter : section_aut_lifter(sq), &trace);
            node["children"].push_back(glue_node(cb, sq, *psi1, *psi2, trace, iso));
            add_claim(node, cb.iso(iso));
            return iso;
        } catch (const LifterContractError& e) {
            json ob;
            obligation(ob, p, q, std::string("automorphism lift failed: ") + e.what());
            node["children"].push_back(ob);
            return std::nullopt;
        }
    }
};

} // namespace

EngineResult cancel_witness(const ProjModule& p, const ProjModule& q, const ModIso& stab, const AutLifter& lifter,
                            const CancelOracle& leaf)
{
    require_stanley_reisner(p.ring());
    if (!(p.ring() == q.ring()))
        throw PreconditionError("modules over different rings");
    if (rank(p) != rank(q))
        throw PreconditionError("modules of different rank");
    if (!iso_holds(stab))
        throw PreconditionError("stabilizing isomorphism does not verify");
    const auto k = stab.source.size() - p.size();
    if (stab.source.size() < p.size() ||
        !(stab.source.idempotent() == PolyMatrix::block_diagonal(p.idempotent(), p.ring().identity(k))) ||
        stab.target.size() < q.size() ||
        !(stab.target.idempotent() ==
          PolyMatrix::block_diagonal(q.idempotent(), q.ring().identity(stab.target.size() - q.size()))) ||
        stab.target.size() - q.size() != k)
        throw PreconditionError("stabilizing isomorphism is not between P ⊕ free and P' ⊕ free");

    CertBuilder cb;
    EngineResult result;
    json root;
    CancelRun run{lifter, leaf, cb, result.obligations, p.ring().complex().faces().size()};
    result.iso = run.run(p, q, stab, root, 0);
    json top = CertBuilder::node("lift", "cancellation");
    top["claims"].push_back(cb.iso(stab));
    if (result.iso)
        top["claims"].push_back(cb.iso(*result.iso));
    top["children"].push_back(root);
    result.certificate = cb.document("cancel", top, detail::obligations_json(cb, result.obligations),
                                     HypothesisProfile::of(p.ring().field(), rank(p)).to_json());
    return result;
}

} // namespace srpb
