#include "srpb/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace srpb {

namespace {

struct Element {
    Polynomial poly;
    std::vector<Polynomial> cof;
};

void subtract_cofactors(std::vector<Polynomial>& into, const Scalar& c, const Monomial& m,
                        const std::vector<Polynomial>& from)
{
    for (std::size_t i = 0; i < into.size(); ++i)
        if (!from[i].is_zero())
            into[i].subtract_multiple(c, m, from[i]);
}

void make_monic(Element& e)
{
    auto inv = e.poly.lead().coeff.inverse();
    if (inv.is_one())
        return;
    e.poly = e.poly.scaled(inv);
    for (auto& c : e.cof)
        c = c.scaled(inv);
}

// Full reduction of e by basis elements (skipping index `skip`), updating cofactors.
void reduce_element(Element& e, const std::vector<Element>& basis, std::size_t skip)
{
    Polynomial rest = std::move(e.poly);
    Polynomial remainder(rest.context());
    while (!rest.is_zero()) {
        const auto& lt = rest.lead();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip)
                continue;
            const auto& g = basis[k].poly;
            if (!g.lead().mono.divides(lt.mono))
                continue;
            auto c = lt.coeff / g.lead().coeff;
            auto m = lt.mono / g.lead().mono;
            subtract_cofactors(e.cof, c, m, basis[k].cof);
            rest.subtract_multiple(c, m, g);
            reduced = true;
            break;
        }
        if (!reduced)
            remainder.append_lower(rest.take_lead());
    }
    e.poly = std::move(remainder);
}

struct Pair {
    std::size_t i;
    std::size_t j;
    std::uint64_t degree;
};

} // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens)
{
    if (gens.empty())
        throw InputError("Gröbner basis of an empty generator list");
    return buchberger(gens, gens.front().context()->order);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order)
{
    if (gens.empty())
        throw InputError("Gröbner basis of an empty generator list");
    const auto& src = gens.front().context();
    for (const auto& g : gens)
        if (!same_context(g.context(), src))
            throw ContextError("Gröbner generators over different contexts");
    ContextPtr ctx = src->order == order ? src : make_context(src->field, src->nvars, order);

    GroebnerBasis gb;
    gb.context = ctx;
    for (const auto& g : gens)
        gb.inputs.push_back(g.with_context(ctx));
    const auto m = gb.inputs.size();
    auto unit_row = [&](std::size_t i) {
        std::vector<Polynomial> row(m, Polynomial(ctx));
        row[i] = Polynomial::constant(ctx, 1);
        return row;
    };

    std::vector<Element> basis;
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto l = basis[i].poly.lead().mono.lcm(basis[j].poly.lead().mono);
            pairs.push_back({i, j, l.degree()});
        }
    };

    std::optional<Element> unit;
    for (std::size_t i = 0; i < m && !unit; ++i) {
        if (gb.inputs[i].is_zero())
            continue;
        Element e{gb.inputs[i], unit_row(i)};
        make_monic(e);
        if (e.poly.is_constant()) {
            unit = std::move(e);
            break;
        }
        basis.push_back(std::move(e));
        add_pairs(basis.size() - 1);
    }

    while (!unit && !pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
        });
        Pair p = *best;
        pairs.erase(best);
        const auto& fi = basis[p.i];
        const auto& fj = basis[p.j];
        const auto& mi = fi.poly.lead().mono;
        const auto& mj = fj.poly.lead().mono;
        if (mi.coprime(mj))
            continue; // product criterion
        auto l = mi.lcm(mj);
        auto one = Scalar::one(ctx->field);
        Element s{fi.poly.times_term(one, l / mi), std::vector<Polynomial>(m, Polynomial(ctx))};
        for (std::size_t k = 0; k < m; ++k)
            s.cof[k] = fi.cof[k].times_term(one, l / mi);
        s.poly.subtract_multiple(one, l / mj, fj.poly);
        subtract_cofactors(s.cof, one, l / mj, fj.cof);
        reduce_element(s, basis, static_cast<std::size_t>(-1));
        if (s.poly.is_zero())
            continue;
        make_monic(s);
        if (s.poly.is_constant()) {
            unit = std::move(s);
            break;
        }
        basis.push_back(std::move(s));
        add_pairs(basis.size() - 1);
    }

    if (unit) {
        gb.basis.push_back(unit->poly);
        gb.cofactors.push_back(unit->cof);
        return gb;
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Element> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& mk = basis[k].poly.lead().mono;
        bool drop = false;
        for (std::size_t l = 0; l < basis.size() && !drop; ++l) {
            if (l == k)
                continue;
            const auto& ml = basis[l].poly.lead().mono;
            if (ml.divides(mk) && (ml != mk || l < k))
                drop = true;
        }
        if (!drop)
            minimal.push_back(basis[k]);
    }
    // Tail-reduce each element by the others.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        reduce_element(minimal[k], minimal, k);
        make_monic(minimal[k]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Element& a, const Element& b) {
        return ctx->order.compare(a.poly.lead().mono, b.poly.lead().mono) == std::strong_ordering::less;
    });
    for (auto& e : minimal) {
        gb.basis.push_back(std::move(e.poly));
        gb.cofactors.push_back(std::move(e.cof));
    }
    if (!is_confluent(gb))
        throw InternalError("Buchberger finished with a non-confluent basis");
    return gb;
}

Polynomial reduce(const Polynomial& f, const GroebnerBasis& gb)
{
    auto rest = f.with_context(gb.context);
    Polynomial remainder(gb.context);
    while (!rest.is_zero()) {
        const auto& lt = rest.lead();
        bool reduced = false;
        for (const auto& g : gb.basis) {
            if (!g.lead().mono.divides(lt.mono))
                continue;
            rest.subtract_multiple(lt.coeff / g.lead().coeff, lt.mono / g.lead().mono, g);
            reduced = true;
            break;
        }
        if (!reduced)
            remainder.append_lower(rest.take_lead());
    }
    return remainder;
}

bool is_confluent(const GroebnerBasis& gb)
{
    auto one = Scalar::one(gb.context->field);
    for (std::size_t j = 0; j < gb.basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const auto& fi = gb.basis[i];
            const auto& fj = gb.basis[j];
            auto l = fi.lead().mono.lcm(fj.lead().mono);
            auto s = fi.times_term(fi.lead().coeff.inverse(), l / fi.lead().mono);
            s.subtract_multiple(fj.lead().coeff.inverse(), l / fj.lead().mono, fj);
            if (!reduce(s, gb).is_zero())
                return false;
        }
    return true;
}

bool cofactors_consistent(const GroebnerBasis& gb)
{
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        Polynomial acc(gb.context);
        for (std::size_t i = 0; i < gb.inputs.size(); ++i)
            acc += gb.cofactors[k][i] * gb.inputs[i];
        if (!(acc == gb.basis[k]))
            return false;
    }
    return true;
}

bool certificate_holds(const MembershipCertificate& cert, std::span<const Polynomial> gens)
{
    if (cert.coefficients.size() != gens.size())
        return false;
    Polynomial acc(cert.target.context());
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc += cert.coefficients[i] * gens[i];
    return acc == cert.target;
}

std::optional<MembershipCertificate> member(const Polynomial& f, const GroebnerBasis& gb)
{
    const auto m = gb.inputs.size();
    auto rest = f.with_context(gb.context);
    std::vector<Polynomial> quotients(gb.basis.size(), Polynomial(gb.context));
    while (!rest.is_zero()) {
        const auto& lt = rest.lead();
        bool reduced = false;
        for (std::size_t k = 0; k < gb.basis.size(); ++k) {
            const auto& g = gb.basis[k];
            if (!g.lead().mono.divides(lt.mono))
                continue;
            auto c = lt.coeff / g.lead().coeff;
            auto mono = lt.mono / g.lead().mono;
            quotients[k] += Polynomial::term(gb.context, c, mono);
            rest.subtract_multiple(c, mono, g);
            reduced = true;
            break;
        }
        if (!reduced)
            return std::nullopt;
    }
    const auto& home = f.context();
    MembershipCertificate cert{f, std::vector<Polynomial>(m, Polynomial(gb.context))};
    for (std::size_t k = 0; k < gb.basis.size(); ++k)
        if (!quotients[k].is_zero())
            for (std::size_t i = 0; i < m; ++i)
                if (!gb.cofactors[k][i].is_zero())
                    cert.coefficients[i] += quotients[k] * gb.cofactors[k][i];
    for (auto& c : cert.coefficients)
        c = c.with_context(home);
    std::vector<Polynomial> gens;
    for (const auto& g : gb.inputs)
        gens.push_back(g.with_context(home));
    if (!certificate_holds(cert, gens))
        throw InternalError("membership certificate fails its defining identity");
    return cert;
}

std::optional<MembershipCertificate> member(const Polynomial& f, std::span<const Polynomial> gens)
{
    if (gens.empty())
        return f.is_zero() ? std::optional<MembershipCertificate>(MembershipCertificate{f, {}}) : std::nullopt;
    return member(f, buchberger(gens));
}

std::optional<PolyMatrix> unimodular_cert(const PolyMatrix& v, const QuotientRing& ring)
{
    if (v.rows() != 1)
        throw ShapeError("unimodular certificate needs a row vector");
    std::vector<Polynomial> gens;
    for (const auto& e : v.entries())
        gens.push_back(ring.normal_form(e));
    for (auto& g : ring.generator_polynomials())
        gens.push_back(std::move(g));
    auto cert = member(ring.one(), gens);
    if (!cert)
        return std::nullopt;
    PolyMatrix w(ring.context(), 1, v.cols());
    for (std::size_t i = 0; i < v.cols(); ++i)
        w(0, i) = ring.normal_form(cert->coefficients[i]);
    auto check = ring.mul(v, w.transpose());
    if (!check(0, 0).is_one())
        throw InternalError("unimodular certificate does not pair to 1");
    return w;
}

} // namespace srpb
