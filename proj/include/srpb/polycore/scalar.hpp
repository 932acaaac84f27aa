#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace srpb {

/// Coefficient field: the rationals or a prime field F_p.
class Field {
public:
    constexpr Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws InputError unless p is prime.
    static Field prime(std::uint32_t p);
    /// Accepts "Q" or "Fp:<p>".
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit constexpr Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms, residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(Field field, long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field field) { return Scalar(field, 0L); }
    static Scalar one(Field field) { return Scalar(field, 1L); }

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    /// Residue or rational value as an mpq.
    const mpq_class& value() const { return value_; }
    /// True for rationals with denominator 1 and for every residue.
    bool is_integer() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// Decimal form: "a", "-a" or "a/b". Residues print as their representative in [0, p).
    std::string to_string() const;

private:
    void reduce();
    void check_field(const Scalar& other) const;

    Field field_;
    mpq_class value_;
};

} // namespace srpb
