#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srpb/polycore/monomial.hpp"
#include "srpb/polycore/scalar.hpp"

namespace srpb {

struct Term {
    Scalar coeff;
    Monomial mono;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over a shared variable context.
///
/// Terms are kept strictly descending in the context's term order with no
/// zero coefficients, so two polynomials are equal iff their term lists are.
class Polynomial {
public:
    explicit Polynomial(ContextPtr ctx);

    static Polynomial constant(ContextPtr ctx, const Scalar& c);
    static Polynomial constant(ContextPtr ctx, long c);
    static Polynomial variable(ContextPtr ctx, std::size_t index);
    static Polynomial term(ContextPtr ctx, const Scalar& c, Monomial m);
    /// Sorts, merges like terms and drops zeros.
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

    const ContextPtr& context() const { return ctx_; }
    Field field() const { return ctx_->field; }
    std::size_t nvars() const { return ctx_->nvars; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Scalar constant_term() const;
    /// Leading term; requires a nonzero polynomial.
    const Term& lead() const { return terms_.front(); }
    std::uint64_t total_degree() const;
    /// Union of the supports of all terms.
    std::uint64_t support() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial scaled(const Scalar& c) const;
    /// this * c * m
    Polynomial times_term(const Scalar& c, const Monomial& m) const;
    /// this - c * m * other, the basic reduction step
    void subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& other);
    Polynomial pow(std::uint32_t e) const;
    /// Removes and returns the leading term.
    Term take_lead();
    /// Appends a term below every current term; the caller guarantees the order.
    void append_lower(Term t);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

    /// Same polynomial over another context with equal field and variable count
    /// (typically a different term order).
    Polynomial with_context(ContextPtr ctx) const;

    /// Keeps the terms for which `keep(monomial)` holds; the order is unchanged.
    template <class Pred>
    Polynomial filtered(Pred keep) const
    {
        Polynomial out(ctx_);
        for (const auto& t : terms_)
            if (keep(t.mono))
                out.terms_.push_back(t);
        return out;
    }

    /// Expression-grammar rendering, e.g. "x0^2*x1 - 1/2*x2 + 3".
    std::string to_string() const;

private:
    void check_context(const Polynomial& other) const;
    void canonicalize();

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

/// Ring homomorphism by assignment: every assigned image must live over one common
/// target context; unassigned variables map to themselves, which requires the
/// target to have the same variable count.
Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& assignment);

/// Full assignment: images[i] is the image of X_i.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Index of the only variable occurring in f, or nullopt if f is constant.
/// Throws UnsupportedRingError if more than one variable occurs.
std::optional<std::size_t> sole_variable(const Polynomial& f);

/// Division with remainder in k[t]; both arguments must involve at most the
/// variable t. Returns (quotient, remainder) with deg(remainder) < deg(divisor).
std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& f, const Polynomial& g);

/// Monic gcd in k[t].
Polynomial gcd_univariate(Polynomial a, Polynomial b);

} // namespace srpb
