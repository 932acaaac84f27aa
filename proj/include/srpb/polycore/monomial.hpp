#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "srpb/polycore/scalar.hpp"

namespace srpb {

/// Exponent vector X_0^{a_0} ... X_n^{a_n}; the length is fixed by the ring context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t degree() const;
    bool is_one() const;
    /// Bit i set iff X_i occurs.
    std::uint64_t support() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    /// True iff the monomials share no variable.
    bool coprime(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Plain lexicographic comparison of the exponent vectors (container ordering, not a term order).
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Monomial order. `precedence` lists variables from most to least significant.
struct TermOrder {
    enum class Kind { lex, grevlex };

    Kind kind = Kind::grevlex;
    std::vector<std::size_t> precedence;

    static TermOrder grevlex(std::size_t nvars);
    static TermOrder lex(std::size_t nvars);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

/// Field, variable count and term order shared by all polynomials of one ring.
struct VarContext {
    Field field;
    std::size_t nvars = 0;
    TermOrder order;

    friend bool operator==(const VarContext&, const VarContext&) = default;
};

using ContextPtr = std::shared_ptr<const VarContext>;

/// Variables are limited to x0 ... x63.
inline constexpr std::size_t max_variables = 64;

ContextPtr make_context(Field field, std::size_t nvars);
ContextPtr make_context(Field field, std::size_t nvars, TermOrder order);

bool same_context(const ContextPtr& a, const ContextPtr& b);

} // namespace srpb
