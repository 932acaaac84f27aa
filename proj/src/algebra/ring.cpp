#include "srpb/quotient/ring.hpp"

#include <algorithm>
#include <sstream>

namespace srpb {

namespace {

bool canonical_generator_order(const Monomial& a, const Monomial& b)
{
    auto da = a.degree();
    auto db = b.degree();
    if (da != db)
        return da < db;
    return a > b;
}

} // namespace

QuotientRing::QuotientRing(ContextPtr ctx, std::vector<Monomial> generators) : ctx_(std::move(ctx))
{
    for (const auto& g : generators)
        if (g.size() != ctx_->nvars)
            throw ContextError("ideal generator length does not match the ring");
    std::sort(generators.begin(), generators.end(), canonical_generator_order);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const auto& g : generators) {
        bool redundant =
            std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
        if (!redundant)
            gens_.push_back(g);
    }
}

QuotientRing QuotientRing::stanley_reisner(ContextPtr ctx, const SimplicialComplex& complex)
{
    if (complex.ambient() != ctx->nvars)
        throw ContextError("complex has " + std::to_string(complex.ambient()) + " vertices but the ring has " +
                           std::to_string(ctx->nvars) + " variables");
    return QuotientRing(std::move(ctx), sr_ideal(complex));
}

QuotientRing QuotientRing::base_field(ContextPtr ctx)
{
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < ctx->nvars; ++i)
        gens.push_back(Monomial::variable(ctx->nvars, i));
    return QuotientRing(std::move(ctx), std::move(gens));
}

bool QuotientRing::survives(const Monomial& m) const
{
    return std::none_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

Polynomial QuotientRing::normal_form(const Polynomial& f) const
{
    if (!same_context(f.context(), ctx_))
        throw ContextError("normal form of a polynomial from another ring");
    if (gens_.empty())
        return f;
    return f.filtered([this](const Monomial& m) { return survives(m); });
}

PolyMatrix QuotientRing::normal_form(const PolyMatrix& m) const
{
    return m.map([this](const Polynomial& p) { return normal_form(p); });
}

Reducer QuotientRing::reducer() const
{
    auto self = *this;
    return [self](const Polynomial& p) { return self.normal_form(p); };
}

bool QuotientRing::is_square_free() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
        return std::all_of(g.exponents().begin(), g.exponents().end(), [](auto e) { return e <= 1; });
    });
}

SimplicialComplex QuotientRing::complex() const
{
    if (!is_square_free())
        throw InputError("ring " + describe() + " is not a Stanley-Reisner ring");
    return complex_from_ideal(ctx_->nvars, gens_);
}

VertexSet QuotientRing::killed_variables() const
{
    VertexSet s = 0;
    for (const auto& g : gens_)
        if (g.degree() == 1)
            s |= g.support();
    return s;
}

VertexSet QuotientRing::live_variables() const
{
    VertexSet all = ctx_->nvars == 64 ? ~VertexSet{0} : (VertexSet{1} << ctx_->nvars) - 1;
    return all & ~killed_variables();
}

bool QuotientRing::is_polynomial_ring() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

std::vector<Polynomial> QuotientRing::generator_polynomials() const
{
    std::vector<Polynomial> out;
    for (const auto& g : gens_)
        out.push_back(Polynomial::term(ctx_, Scalar::one(ctx_->field), g));
    return out;
}

std::string QuotientRing::describe() const
{
    std::ostringstream out;
    out << ctx_->field.name() << "[x0..x" << (ctx_->nvars ? ctx_->nvars - 1 : 0) << "]/(";
    for (std::size_t k = 0; k < gens_.size(); ++k)
        out << (k ? ", " : "") << Polynomial::term(ctx_, Scalar::one(ctx_->field), gens_[k]).to_string();
    out << ')';
    return out.str();
}

bool operator==(const QuotientRing& a, const QuotientRing& b)
{
    return same_context(a.ctx_, b.ctx_) && a.gens_ == b.gens_;
}

bool is_normal(const QuotientRing& ring, const PolyMatrix& m)
{
    return ring.normal_form(m) == m;
}

HomCheckError::HomCheckError(std::string generator, std::string image)
    : InputError("generator " + generator + " maps to nonzero " + image),
      generator_(std::move(generator)),
      image_(std::move(image))
{
}

RingHom::RingHom(QuotientRing source, QuotientRing target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_.nvars())
        throw InputError("ring map needs " + std::to_string(source_.nvars()) + " images, got " +
                         std::to_string(images_.size()));
    if (source_.field() != target_.field())
        throw ContextError("ring map between different fields");
    for (auto& img : images_) {
        if (!same_context(img.context(), target_.context()))
            throw ContextError("ring map image outside the target ring");
        img = target_.normal_form(img);
    }
    monomial_map_ = true;
    variable_map_.assign(images_.size(), -1);
    for (std::size_t v = 0; v < images_.size() && monomial_map_; ++v) {
        const auto& img = images_[v];
        if (img.is_zero())
            continue;
        if (img.terms().size() == 1 && img.lead().coeff.is_one() && img.lead().mono.degree() == 1) {
            auto mask = img.lead().mono.support();
            long idx = 0;
            while (((mask >> idx) & 1u) == 0)
                ++idx;
            variable_map_[v] = idx;
        } else {
            monomial_map_ = false;
        }
    }
}

RingHom RingHom::natural(const QuotientRing& source, const QuotientRing& target)
{
    return killing(source, target, 0);
}

RingHom RingHom::killing(const QuotientRing& source, const QuotientRing& target, VertexSet killed)
{
    if (source.nvars() != target.nvars())
        throw ContextError("natural map between rings on different variable sets");
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < source.nvars(); ++v)
        images.push_back((killed >> v) & 1u ? target.zero() : Polynomial::variable(target.context(), v));
    return RingHom(source, target, std::move(images));
}

RingHom RingHom::augmentation(const QuotientRing& source)
{
    auto target = QuotientRing::base_field(source.context());
    std::vector<Polynomial> images(source.nvars(), target.zero());
    return RingHom(source, target, std::move(images));
}

Polynomial RingHom::apply(const Polynomial& f) const
{
    if (!same_context(f.context(), source_.context()))
        throw ContextError("ring map applied to a polynomial outside its source");
    if (!monomial_map_)
        return target_.normal_form(substitute(f, images_));
    std::vector<Term> out;
    const auto n = target_.nvars();
    for (const auto& t : f.terms()) {
        Monomial m(n);
        bool vanishes = false;
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0)
                continue;
            if (variable_map_[v] < 0) {
                vanishes = true;
                break;
            }
            m[static_cast<std::size_t>(variable_map_[v])] += t.mono[v];
        }
        if (!vanishes && target_.survives(m))
            out.push_back({t.coeff, std::move(m)});
    }
    return Polynomial::from_terms(target_.context(), std::move(out));
}

PolyMatrix RingHom::apply(const PolyMatrix& m) const
{
    std::vector<Polynomial> entries;
    entries.reserve(m.entries().size());
    for (const auto& e : m.entries())
        entries.push_back(apply(e));
    return PolyMatrix(target_.context(), m.rows(), m.cols(), std::move(entries));
}

RingHom hom_check(RingHom h)
{
    for (const auto& g : h.source_.generator_polynomials()) {
        auto image = h.target_.normal_form(substitute(g, h.images_));
        if (!image.is_zero())
            throw HomCheckError(g.to_string(), image.to_string());
    }
    h.verified_ = true;
    return h;
}

bool operator==(const RingHom& a, const RingHom& b)
{
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
}

RingHom compose(const RingHom& g, const RingHom& f)
{
    if (!(f.target() == g.source()))
        throw ContextError("composing ring maps with mismatched middle ring");
    std::vector<Polynomial> images;
    for (const auto& img : f.images())
        images.push_back(g.apply(img));
    auto h = RingHom(f.source(), g.target(), std::move(images));
    return (f.verified() && g.verified()) ? hom_check(std::move(h)) : h;
}

} // namespace srpb
