#include "srpb/quotient/units.hpp"

#include <array>
#include <bit>

#include "srpb/groebner.hpp"
#include "srpb/quotient/square.hpp"

namespace srpb {

namespace {

PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d)
{
    const auto r = a.rows();
    PolyMatrix out(a.context(), 2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            out(i, j) = a(i, j);
            out(i, j + r) = b(i, j);
            out(i + r, j) = c(i, j);
            out(i + r, j + r) = d(i, j);
        }
    return out;
}

void check_square(const PolyMatrix& m, const char* what)
{
    if (!m.is_square())
        throw ShapeError(std::string(what) + " must be square, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

// Row reduction over a quotient ring, remembering every row_i += q·row_k.
struct RowOps {
    const QuotientRing& ring;
    PolyMatrix a;
    struct Op {
        std::size_t target;
        std::size_t source;
        Polynomial q;
    };
    std::vector<Op> ops;

    void add(std::size_t target, std::size_t source, const Polynomial& q)
    {
        if (q.is_zero())
            return;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(source, j).is_zero())
                a(target, j) = ring.normal_form(a(target, j) + q * a(source, j));
        ops.push_back({target, source, q});
    }

    // σ = O_1⁻¹ ⋯ O_m⁻¹ · D once a is diagonal.
    Factorization word() const
    {
        Factorization w;
        w.size = a.rows();
        for (const auto& op : ops)
            w.factors.push_back({Factor::Kind::elementary, op.target, op.source, {-op.q}});
        std::vector<Polynomial> diag;
        bool trivial = true;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            diag.push_back(a(i, i));
            trivial = trivial && a(i, i).is_one();
        }
        if (!trivial)
            w.factors.push_back({Factor::Kind::diagonal, 0, 0, std::move(diag)});
        return w;
    }
};

Polynomial reinterpret(const Polynomial& f, const QuotientRing& ring)
{
    return ring.normal_form(f);
}

Factorization map_word(const Factorization& w, const RingHom& h)
{
    Factorization out{w.size, {}};
    for (const auto& f : w.factors) {
        Factor g = f;
        for (auto& v : g.values)
            v = h.apply(v);
        out.factors.push_back(std::move(g));
    }
    return out;
}

Factorization inverse_word(const Factorization& w, const QuotientRing& ring)
{
    Factorization out{w.size, {}};
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        Factor g = *it;
        if (g.kind == Factor::Kind::elementary) {
            g.values[0] = -g.values[0];
        } else {
            for (auto& v : g.values) {
                auto inv = unit_inverse(v, ring);
                if (!inv)
                    throw InternalError("diagonal factor entry is not a unit: " + v.to_string());
                v = *inv;
            }
        }
        out.factors.push_back(std::move(g));
    }
    return out;
}

} // namespace

bool is_inverse_pair(const QuotientRing& ring, const PolyMatrix& m, const PolyMatrix& inverse)
{
    if (!m.is_square() || m.rows() != inverse.rows() || m.cols() != inverse.cols())
        return false;
    return ring.mul(m, inverse).is_identity() && ring.mul(inverse, m).is_identity();
}

std::optional<Polynomial> unit_inverse(const Polynomial& f, const QuotientRing& ring)
{
    auto g = ring.normal_form(f);
    if (g.is_zero())
        return std::nullopt;
    if (g.is_constant())
        return Polynomial::constant(ring.context(), g.constant_term().inverse());
    // units map to units of k under the augmentation
    if (g.constant_term().is_zero())
        return std::nullopt;
    // a reduced graded ring has only constant units
    if (ring.is_square_free())
        return std::nullopt;
    std::vector<Polynomial> gens{g};
    for (auto& p : ring.generator_polynomials())
        gens.push_back(p);
    auto cert = member(Polynomial::constant(ring.context(), 1), gens);
    if (!cert)
        return std::nullopt;
    auto inv = ring.normal_form(cert->coefficients.front());
    if (!ring.normal_form(inv * g).is_one())
        throw InternalError("unit certificate does not invert " + g.to_string());
    return inv;
}

UnitInverseResult det_unit_inverse(const PolyMatrix& m, const QuotientRing& ring)
{
    check_square(m, "det_unit_inverse input");
    auto reduce = ring.reducer();
    UnitInverseResult out{determinant(m, reduce), std::nullopt};
    auto q = unit_inverse(out.det, ring);
    if (!q)
        return out;
    auto inv = ring.normal_form(scale(adjugate(m, reduce), *q));
    if (!is_inverse_pair(ring, ring.normal_form(m), inv))
        throw InternalError("adjugate inverse does not verify");
    out.inverse = std::move(inv);
    return out;
}

Invertible whitehead_lift(const Invertible& sigma, const RingHom& j2, const RingHom& section)
{
    check_square(sigma.matrix, "Whitehead input");
    const auto& a0 = j2.target();
    const auto& a2 = j2.source();
    if (!is_inverse_pair(a0, sigma.matrix, sigma.inverse))
        throw PreconditionError("Whitehead input inverse does not verify");
    if (!(section.source() == a0) || !(section.target() == a2))
        throw PreconditionError("section does not split the given map");
    const auto r = sigma.matrix.rows();
    const auto ctx = a2.context();
    auto s = section.apply(sigma.matrix);
    auto sinv = section.apply(sigma.inverse);
    auto one = PolyMatrix::identity(ctx, r);
    PolyMatrix zero(ctx, r, r);
    auto f1 = blocks(one, s, zero, one);
    auto f2 = blocks(one, zero, -sinv, one);
    auto f4 = blocks(zero, -one, one, zero);
    auto f1inv = blocks(one, -s, zero, one);
    auto f2inv = blocks(one, zero, sinv, one);
    auto f4inv = blocks(zero, one, -one, zero);
    std::array fwd{f1, f2, f1, f4};
    std::array back{f4inv, f1inv, f2inv, f1inv};
    Invertible u{multiply_all(fwd, a2.reducer()), multiply_all(back, a2.reducer())};
    if (!(j2.apply(u.matrix) == PolyMatrix::block_diagonal(a0.normal_form(sigma.matrix),
                                                           a0.normal_form(sigma.inverse))))
        throw InternalError("Whitehead lift does not reduce to the block diagonal");
    if (!is_inverse_pair(a2, u.matrix, u.inverse))
        throw InternalError("Whitehead lift inverse does not verify");
    return u;
}

std::optional<Invertible> materialize(const Factorization& word, const QuotientRing& ring)
{
    const auto n = word.size;
    Invertible out{ring.identity(n), ring.identity(n)};
    auto& p = out.matrix;
    auto& q = out.inverse;
    for (const auto& f : word.factors) {
        if (f.kind == Factor::Kind::elementary) {
            auto v = reinterpret(f.values[0], ring);
            if (v.is_zero())
                continue;
            // P·E(i,j,v): col_j += v·col_i;  E(i,j,-v)·Q: row_i -= v·row_j
            for (std::size_t r = 0; r < n; ++r)
                if (!p(r, f.row).is_zero())
                    p(r, f.col) = ring.normal_form(p(r, f.col) + v * p(r, f.row));
            for (std::size_t c = 0; c < n; ++c)
                if (!q(f.col, c).is_zero())
                    q(f.row, c) = ring.normal_form(q(f.row, c) - v * q(f.col, c));
        } else {
            for (std::size_t k = 0; k < n; ++k) {
                auto d = reinterpret(f.values[k], ring);
                auto dinv = unit_inverse(d, ring);
                if (!dinv)
                    return std::nullopt;
                for (std::size_t r = 0; r < n; ++r)
                    p(r, k) = ring.normal_form(p(r, k) * d);
                for (std::size_t c = 0; c < n; ++c)
                    q(k, c) = ring.normal_form(q(k, c) * *dinv);
            }
        }
    }
    return out;
}

std::optional<Factorization> unit_pivot_factor(const PolyMatrix& sigma, const QuotientRing& ring,
                                               std::string& why)
{
    check_square(sigma, "factorization input");
    const auto n = sigma.rows();
    RowOps ops{ring, ring.normal_form(sigma), {}};
    auto& a = ops.a;
    for (std::size_t k = 0; k < n; ++k) {
        auto pinv = unit_inverse(a(k, k), ring);
        if (!pinv) {
            for (std::size_t i = k + 1; i < n && !pinv; ++i) {
                auto u = unit_inverse(a(i, k), ring);
                if (!u)
                    continue;
                // makes a(k,k) = 1
                ops.add(k, i, ring.normal_form((ring.one() - a(k, k)) * *u));
                pinv = ring.one();
            }
        }
        if (!pinv) {
            why = "no unit pivot in column " + std::to_string(k) + " (entry " + a(k, k).to_string() + ")";
            return std::nullopt;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (i != k && !a(i, k).is_zero())
                ops.add(i, k, ring.normal_form(-a(i, k) * *pinv));
    }
    return ops.word();
}

std::optional<Factorization> lead_reduction_factor(const PolyMatrix& sigma, const QuotientRing& ring,
                                                   std::string& why)
{
    check_square(sigma, "factorization input");
    const auto n = sigma.rows();
    const auto& order = ring.context()->order;
    RowOps ops{ring, ring.normal_form(sigma), {}};
    auto& a = ops.a;
    for (std::size_t k = 0; k < n; ++k) {
        std::optional<Polynomial> uinv;
        std::size_t u = n;
        for (;;) {
            for (std::size_t i = k; i < n && !uinv; ++i)
                if ((uinv = unit_inverse(a(i, k), ring)))
                    u = i;
            if (uinv)
                break;
            std::size_t p = n;
            for (std::size_t i = k; i < n; ++i)
                if (!a(i, k).is_zero() && (p == n || order.compare(a(i, k).lead().mono, a(p, k).lead().mono) < 0))
                    p = i;
            if (p == n) {
                why = "column " + std::to_string(k) + " vanishes below the diagonal";
                return std::nullopt;
            }
            bool progress = false;
            const auto lp = a(p, k).lead();
            for (std::size_t i = k; i < n; ++i) {
                if (i == p || a(i, k).is_zero() || !lp.mono.divides(a(i, k).lead().mono))
                    continue;
                const auto li = a(i, k).lead();
                ops.add(i, p, Polynomial::term(ring.context(), -(li.coeff / lp.coeff), li.mono / lp.mono));
                progress = true;
            }
            if (!progress) {
                why = "column " + std::to_string(k) + " has no unit and its leading terms do not divide each other";
                return std::nullopt;
            }
        }
        if (u != k)
            ops.add(k, u, ring.normal_form((ring.one() - a(k, k)) * *uinv));
        auto pinv = unit_inverse(a(k, k), ring);
        if (!pinv)
            throw InternalError("pivot repair did not produce a unit");
        for (std::size_t i = 0; i < n; ++i)
            if (i != k && !a(i, k).is_zero())
                ops.add(i, k, ring.normal_form(-a(i, k) * *pinv));
    }
    return ops.word();
}

std::optional<Factorization> euclid_factor(const PolyMatrix& sigma, const QuotientRing& ring,
                                           std::string& why)
{
    check_square(sigma, "factorization input");
    if (!ring.is_polynomial_ring() || std::popcount(ring.live_variables()) > 1) {
        why = "ring is not a polynomial ring in at most one variable";
        return std::nullopt;
    }
    const auto n = sigma.rows();
    RowOps ops{ring, ring.normal_form(sigma), {}};
    auto& a = ops.a;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (;;) {
            p = n;
            for (std::size_t i = k; i < n; ++i)
                if (!a(i, k).is_zero() && (p == n || a(i, k).total_degree() < a(p, k).total_degree()))
                    p = i;
            if (p == n) {
                why = "column " + std::to_string(k) + " vanishes below the diagonal; matrix is singular";
                return std::nullopt;
            }
            bool cleared = true;
            for (std::size_t i = k; i < n; ++i) {
                if (i == p || a(i, k).is_zero())
                    continue;
                auto [quot, rem] = divmod_univariate(a(i, k), a(p, k));
                ops.add(i, p, -quot);
                cleared = cleared && rem.is_zero();
            }
            if (cleared)
                break;
        }
        if (p != k) {
            ops.add(k, p, ring.one());
            ops.add(p, k, -ring.one());
        }
        if (!a(k, k).is_constant()) {
            why = "pivot " + a(k, k).to_string() + " is not a unit; matrix is not invertible";
            return std::nullopt;
        }
        auto pinv = Polynomial::constant(ring.context(), a(k, k).constant_term().inverse());
        for (std::size_t i = 0; i < k; ++i)
            if (!a(i, k).is_zero())
                ops.add(i, k, ring.normal_form(-a(i, k) * pinv));
    }
    return ops.word();
}

std::optional<Factorization> descent_factor(const Invertible& sigma, const QuotientRing& ring,
                                            std::string& why)
{
    check_square(sigma.matrix, "factorization input");
    if (!ring.is_square_free()) {
        why = "ring is not a Stanley-Reisner ring";
        return std::nullopt;
    }
    auto complex = ring.complex();
    if (is_simplex(complex)) {
        auto used = std::popcount(complex.used_vertices());
        std::string inner;
        auto w = used == 1 ? euclid_factor(sigma.matrix, ring, inner)
                           : lead_reduction_factor(sigma.matrix, ring, inner);
        if (!w)
            why = "leaf " + complex.to_string() + ": " + inner;
        return w;
    }
    auto square = build_vorst_square(ring.context(), complex);
    const auto& A = square.A;
    auto w1 = descent_factor({square.i1.apply(sigma.matrix), square.i1.apply(sigma.inverse)}, square.A1, why);
    if (!w1)
        return std::nullopt;
    auto a = materialize(*w1, A);
    if (!a)
        throw InternalError("deletion factor does not materialize over the full ring");
    Invertible tau{A.mul(a->inverse, sigma.matrix), A.mul(sigma.inverse, a->matrix)};
    auto w2 = descent_factor({square.i2.apply(tau.matrix), square.i2.apply(tau.inverse)}, square.A2, why);
    if (!w2)
        return std::nullopt;
    // τ = w2 · j2(w2)⁻¹ over A: the correction restricts to the identity on A1.
    Factorization out = *w1;
    for (auto& f : w2->factors)
        out.factors.push_back(f);
    for (auto& f : inverse_word(map_word(*w2, square.j2), square.A0).factors)
        out.factors.push_back(std::move(f));
    auto check = materialize(out, A);
    if (!check || !(check->matrix == A.normal_form(sigma.matrix)))
        throw InternalError("descent word does not multiply back to the input over " + A.describe());
    return out;
}

std::string to_string(LiftStrategy s)
{
    switch (s) {
    case LiftStrategy::entrywise:
        return "entrywise";
    case LiftStrategy::elementary:
        return "elementary";
    case LiftStrategy::section:
        return "section";
    case LiftStrategy::descent:
        return "descent";
    }
    return "unknown";
}

std::optional<LiftStrategy> parse_strategy(const std::string& name)
{
    for (auto s : default_strategies())
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

std::span<const LiftStrategy> default_strategies()
{
    static constexpr std::array all{LiftStrategy::entrywise, LiftStrategy::elementary, LiftStrategy::section,
                                    LiftStrategy::descent};
    return all;
}

std::string GLLiftResult::diagnostics() const
{
    std::string out;
    for (const auto& a : attempts)
        out += to_string(a.strategy) + ": " + (a.ok ? "ok" : a.detail) + "\n";
    return out;
}

GLLiftResult lift_gl(const Invertible& sigma, const RingHom& pi, std::span<const LiftStrategy> strategies,
                     const RingHom* section)
{
    const auto& R = pi.source();
    const auto& T = pi.target();
    check_square(sigma.matrix, "GL lift input");
    if (!same_context(R.context(), T.context()))
        throw ContextError("lift map must keep the variable context");
    for (std::size_t i = 0; i < R.nvars(); ++i)
        if (!(pi.images()[i] == T.variable(i)))
            throw PreconditionError("lift map must send every variable to itself");
    RingHom checked = pi.verified() ? pi : hom_check(pi);
    if (!is_normal(T, sigma.matrix))
        throw PreconditionError("GL lift input is not in normal form");
    if (!is_inverse_pair(T, sigma.matrix, sigma.inverse))
        throw PreconditionError("GL lift input inverse does not verify");

    GLLiftResult result;
    auto finish = [&](LiftStrategy s, Invertible delta) {
        if (!(checked.apply(delta.matrix) == sigma.matrix) || !is_inverse_pair(R, delta.matrix, delta.inverse))
            throw InternalError("strategy " + to_string(s) + " returned an unsound lift");
        result.attempts.push_back({s, true, {}});
        result.used = s;
        result.lift = std::move(delta);
    };
    for (auto s : strategies) {
        std::string why;
        switch (s) {
        case LiftStrategy::entrywise: {
            auto delta = R.normal_form(sigma.matrix);
            auto inv = det_unit_inverse(delta, R);
            if (inv.ok()) {
                finish(s, {delta, *inv.inverse});
                return result;
            }
            why = "determinant " + inv.det.to_string() + " is not a unit";
            break;
        }
        case LiftStrategy::elementary: {
            auto word = unit_pivot_factor(sigma.matrix, T, why);
            if (!word)
                break;
            if (auto delta = materialize(*word, R)) {
                finish(s, std::move(*delta));
                return result;
            }
            why = "a diagonal unit does not lift to a unit";
            break;
        }
        case LiftStrategy::section: {
            if (!section) {
                why = "no section registered";
                break;
            }
            if (!(section->source() == T) || !(section->target() == R)) {
                why = "registered section has the wrong source or target";
                break;
            }
            Invertible delta{section->apply(sigma.matrix), section->apply(sigma.inverse)};
            if (!(checked.apply(delta.matrix) == sigma.matrix)) {
                why = "entries are not in the image of the section";
                break;
            }
            if (!is_inverse_pair(R, delta.matrix, delta.inverse)) {
                why = "section image is not invertible";
                break;
            }
            finish(s, std::move(delta));
            return result;
        }
        case LiftStrategy::descent: {
            auto word = descent_factor(sigma, T, why);
            if (!word)
                break;
            if (auto delta = materialize(*word, R)) {
                finish(s, std::move(*delta));
                return result;
            }
            why = "a diagonal unit does not lift to a unit";
            break;
        }
        }
        result.attempts.push_back({s, false, why});
    }
    return result;
}

} // namespace srpb
