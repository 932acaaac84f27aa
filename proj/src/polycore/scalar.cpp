#include "srpb/polycore/scalar.hpp"

#include "srpb/errors.hpp"

#include <charconv>

namespace srpb {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text)
{
    if (text == "Q")
        return rationals();
    if (text.starts_with("Fp:")) {
        std::uint32_t p = 0;
        auto digits = text.substr(3);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw InputError("bad field descriptor '" + std::string(text) + "'");
        return prime(p);
    }
    throw InputError("bad field descriptor '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const
{
    return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field), value_(value)
{
    reduce();
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(value)
{
    reduce();
}

void Scalar::reduce()
{
    value_.canonicalize();
    if (field_.is_rational())
        return;
    mpz_class p = field_.characteristic();
    mpz_class num = value_.get_num() % p;
    mpz_class den = value_.get_den() % p;
    if (den == 0)
        throw InputError("denominator vanishes modulo " + p.get_str());
    if (den != 1) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        num *= inv;
    }
    num %= p;
    if (num < 0)
        num += p;
    value_ = mpq_class(num);
}

void Scalar::check_field(const Scalar& other) const
{
    if (field_ != other.field_)
        throw ContextError("scalar field mismatch: " + field_.name() + " vs " + other.field_.name());
}

bool Scalar::is_zero() const { return value_ == 0; }

bool Scalar::is_one() const { return value_ == 1; }

bool Scalar::is_integer() const { return value_.get_den() == 1; }

Scalar Scalar::operator-() const
{
    return Scalar(field_, mpq_class(-value_));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero scalar");
    return Scalar(field_, mpq_class(1 / value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check_field(rhs);
    value_ += rhs.value_;
    if (!field_.is_rational())
        reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check_field(rhs);
    value_ -= rhs.value_;
    if (!field_.is_rational())
        reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    check_field(rhs);
    value_ *= rhs.value_;
    if (!field_.is_rational())
        reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    check_field(rhs);
    if (rhs.is_zero())
        throw std::domain_error("division by zero scalar");
    value_ /= rhs.value_;
    reduce();
    return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs)
{
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const
{
    return value_.get_str();
}

} // namespace srpb
