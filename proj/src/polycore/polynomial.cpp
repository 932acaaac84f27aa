#include "srpb/polycore/polynomial.hpp"

#include "srpb/errors.hpp"

#include <algorithm>
#include <sstream>

namespace srpb {

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_)
        throw ContextError("polynomial without a variable context");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Scalar& c)
{
    if (c.field() != ctx->field)
        throw ContextError("constant over " + c.field().name() + " in ring over " + ctx->field.name());
    Polynomial p(ctx);
    if (!c.is_zero())
        p.terms_.push_back({c, Monomial(ctx->nvars)});
    return p;
}

Polynomial Polynomial::constant(ContextPtr ctx, long c)
{
    auto field = ctx->field;
    return constant(std::move(ctx), Scalar(field, c));
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index)
{
    if (index >= ctx->nvars)
        throw ContextError("variable x" + std::to_string(index) + " outside a ring with " +
                           std::to_string(ctx->nvars) + " variables");
    auto m = Monomial::variable(ctx->nvars, index);
    auto one = Scalar::one(ctx->field);
    return term(std::move(ctx), one, std::move(m));
}

Polynomial Polynomial::term(ContextPtr ctx, const Scalar& c, Monomial m)
{
    if (m.size() != ctx->nvars)
        throw ContextError("exponent vector length does not match the ring");
    Polynomial p(std::move(ctx));
    if (!c.is_zero())
        p.terms_.push_back({c, std::move(m)});
    return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms)
{
    Polynomial p(std::move(ctx));
    for (const auto& t : terms) {
        if (t.mono.size() != p.ctx_->nvars)
            throw ContextError("exponent vector length does not match the ring");
        if (t.coeff.field() != p.ctx_->field)
            throw ContextError("coefficient field does not match the ring");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

void Polynomial::canonicalize()
{
    const auto& order = ctx_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return order.compare(a.mono, b.mono) == std::strong_ordering::greater;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

void Polynomial::check_context(const Polynomial& other) const
{
    if (!same_context(ctx_, other.ctx_))
        throw ContextError("polynomials over different variable contexts");
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool Polynomial::is_one() const
{
    return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff.is_one();
}

Scalar Polynomial::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coeff;
    return Scalar::zero(ctx_->field);
}

std::uint64_t Polynomial::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

std::uint64_t Polynomial::support() const
{
    std::uint64_t mask = 0;
    for (const auto& t : terms_)
        mask |= t.mono.support();
    return mask;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto& t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

namespace {

// Merge two descending term lists, combining equal monomials with `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const TermOrder& order, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (i == a.size()) {
            out.push_back(subtract ? Term{-b[j].coeff, b[j].mono} : b[j]);
            ++j;
            continue;
        }
        auto cmp = order.compare(a[i].mono, b[j].mono);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back(subtract ? Term{-b[j].coeff, b[j].mono} : b[j]);
            ++j;
        } else {
            auto c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero())
                out.push_back({std::move(c), a[i].mono});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    check_context(rhs);
    terms_ = merge_terms(terms_, rhs.terms_, ctx_->order, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    check_context(rhs);
    terms_ = merge_terms(terms_, rhs.terms_, ctx_->order, true);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
{
    lhs.check_context(rhs);
    Polynomial out(lhs.ctx_);
    if (lhs.is_zero() || rhs.is_zero())
        return out;
    out.terms_.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_)
        for (const auto& b : rhs.terms_)
            out.terms_.push_back({a.coeff * b.coeff, a.mono * b.mono});
    out.canonicalize();
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    Polynomial out(ctx_);
    if (c.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.coeff * c, t.mono});
    return out;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const
{
    // Multiplying by a monomial preserves the term order.
    Polynomial out(ctx_);
    if (c.is_zero())
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.coeff * c, t.mono * m});
    return out;
}

void Polynomial::subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& other)
{
    check_context(other);
    terms_ = merge_terms(terms_, other.times_term(c, m).terms_, ctx_->order, true);
}

Polynomial Polynomial::pow(std::uint32_t e) const
{
    auto result = constant(ctx_, 1);
    auto base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Term Polynomial::take_lead()
{
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
}

void Polynomial::append_lower(Term t)
{
    if (!terms_.empty() && ctx_->order.compare(terms_.back().mono, t.mono) != std::strong_ordering::greater)
        throw InternalError("append_lower would break the term order");
    if (!t.coeff.is_zero())
        terms_.push_back(std::move(t));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs)
{
    return same_context(lhs.ctx_, rhs.ctx_) && lhs.terms_ == rhs.terms_;
}

Polynomial Polynomial::with_context(ContextPtr ctx) const
{
    if (ctx->field != ctx_->field || ctx->nvars != ctx_->nvars)
        throw ContextError("context change must keep field and variable count");
    return from_terms(std::move(ctx), terms_);
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string coeff = t.coeff.to_string();
        bool negative = !coeff.empty() && coeff.front() == '-';
        if (negative)
            coeff.erase(0, 1);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (any)
                mono << '*';
            mono << 'x' << i;
            if (t.mono[i] > 1)
                mono << '^' << t.mono[i];
            any = true;
        }
        if (!any)
            out << coeff;
        else if (coeff == "1")
            out << mono.str();
        else
            out << coeff << '*' << mono.str();
    }
    return out.str();
}

Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& assignment)
{
    ContextPtr target = assignment.empty() ? f.context() : assignment.begin()->second.context();
    for (const auto& [var, image] : assignment) {
        if (var >= f.nvars())
            throw ContextError("assignment to x" + std::to_string(var) + " outside the source ring");
        if (!same_context(image.context(), target))
            throw ContextError("assignment images over different contexts");
    }
    std::vector<Polynomial> images;
    images.reserve(f.nvars());
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        if (auto it = assignment.find(v); it != assignment.end()) {
            images.push_back(it->second);
        } else {
            if (target->nvars != f.nvars())
                throw ContextError("unassigned variable x" + std::to_string(v) +
                                   " has no default image in the target ring");
            images.push_back(Polynomial::variable(target, v));
        }
    }
    return substitute(f, images);
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images)
{
    if (images.size() != f.nvars())
        throw ContextError("substitution needs one image per variable");
    if (images.empty())
        throw ContextError("substitution from a ring without variables needs a target context");
    const auto& target = images.front().context();
    for (const auto& img : images)
        if (!same_context(img.context(), target))
            throw ContextError("substitution images over different contexts");
    if (target->field != f.field())
        throw ContextError("substitution across different fields");

    // powers[v][e] = images[v]^e, filled on demand
    std::vector<std::vector<Polynomial>> powers(f.nvars());
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty())
            cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial out(target);
    for (const auto& t : f.terms()) {
        auto acc = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < t.mono.size() && !acc.is_zero(); ++v)
            if (t.mono[v] != 0)
                acc *= power(v, t.mono[v]);
        out += acc;
    }
    return out;
}

std::optional<std::size_t> sole_variable(const Polynomial& f)
{
    auto mask = f.support();
    if (mask == 0)
        return std::nullopt;
    if ((mask & (mask - 1)) != 0)
        throw UnsupportedRingError("polynomial " + f.to_string() + " is not univariate");
    std::size_t v = 0;
    while (((mask >> v) & 1u) == 0)
        ++v;
    return v;
}

std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        throw std::domain_error("division by the zero polynomial");
    auto mask = f.support() | g.support();
    if ((mask & (mask - 1)) != 0)
        throw UnsupportedRingError("univariate division on multivariate input");
    Polynomial q(f.context());
    Polynomial r = f;
    const auto& lg = g.lead();
    // Univariate: every term order is by degree, so the lead term has top degree.
    while (!r.is_zero() && lg.mono.divides(r.lead().mono)) {
        auto c = r.lead().coeff / lg.coeff;
        auto m = r.lead().mono / lg.mono;
        q += Polynomial::term(f.context(), c, m);
        r.subtract_multiple(c, m, g);
    }
    return {std::move(q), std::move(r)};
}

Polynomial gcd_univariate(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod_univariate(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.scaled(a.lead().coeff.inverse());
}

} // namespace srpb
