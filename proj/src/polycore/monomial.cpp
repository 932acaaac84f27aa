#include "srpb/polycore/monomial.hpp"

#include "srpb/errors.hpp"

#include <algorithm>
#include <numeric>

namespace srpb {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power)
{
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
}

std::uint64_t Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::uint64_t Monomial::support() const
{
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0)
            mask |= std::uint64_t{1} << i;
    return mask;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] += other.exps_[i];
    return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const
{
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (divisor.exps_[i] > exps_[i])
            throw std::domain_error("monomial does not divide");
        out.exps_[i] -= divisor.exps_[i];
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return out;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0)
            return false;
    return true;
}

TermOrder TermOrder::grevlex(std::size_t nvars)
{
    TermOrder order{Kind::grevlex, std::vector<std::size_t>(nvars)};
    std::iota(order.precedence.begin(), order.precedence.end(), std::size_t{0});
    return order;
}

TermOrder TermOrder::lex(std::size_t nvars)
{
    TermOrder order = grevlex(nvars);
    order.kind = Kind::lex;
    return order;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (kind == Kind::lex) {
        for (auto v : precedence)
            if (a[v] != b[v])
                return a[v] <=> b[v];
        return std::strong_ordering::equal;
    }
    auto da = a.degree();
    auto db = b.degree();
    if (da != db)
        return da <=> db;
    // Equal degree: the smaller exponent in the least significant differing variable wins.
    for (auto it = precedence.rbegin(); it != precedence.rend(); ++it)
        if (a[*it] != b[*it])
            return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
}

ContextPtr make_context(Field field, std::size_t nvars)
{
    return make_context(field, nvars, TermOrder::grevlex(nvars));
}

ContextPtr make_context(Field field, std::size_t nvars, TermOrder order)
{
    if (nvars > max_variables)
        throw InputError("at most " + std::to_string(max_variables) + " variables are supported");
    if (order.precedence.size() != nvars)
        throw InputError("term order precedence must list every variable");
    auto sorted = order.precedence;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < nvars; ++i)
        if (sorted[i] != i)
            throw InputError("term order precedence is not a permutation");
    return std::make_shared<const VarContext>(VarContext{field, nvars, std::move(order)});
}

bool same_context(const ContextPtr& a, const ContextPtr& b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace srpb
