#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "srpb/errors.hpp"
#include "srpb/polycore/matrix.hpp"
#include "srpb/simplicial.hpp"

namespace srpb {

/// k[X_0..X_n]/I with I generated by monomials.
///
/// A term survives in the quotient iff no generator divides it, so the normal
/// form of f is exactly its surviving terms.
class QuotientRing {
public:
    /// Generators are minimalized (pairwise non-dividing) and sorted.
    QuotientRing(ContextPtr ctx, std::vector<Monomial> generators);

    static QuotientRing polynomial_ring(ContextPtr ctx) { return QuotientRing(std::move(ctx), {}); }
    /// A(Σ) = k[X]/I(Σ) over the ambient vertices of Σ.
    static QuotientRing stanley_reisner(ContextPtr ctx, const SimplicialComplex& complex);
    /// The base field, presented as k[X]/(X_0, ..., X_n).
    static QuotientRing base_field(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    Field field() const { return ctx_->field; }
    std::size_t nvars() const { return ctx_->nvars; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool survives(const Monomial& m) const;
    Polynomial normal_form(const Polynomial& f) const;
    PolyMatrix normal_form(const PolyMatrix& m) const;
    Reducer reducer() const;

    Polynomial zero() const { return Polynomial(ctx_); }
    Polynomial one() const { return Polynomial::constant(ctx_, 1); }
    Polynomial variable(std::size_t i) const { return normal_form(Polynomial::variable(ctx_, i)); }
    PolyMatrix identity(std::size_t n) const { return PolyMatrix::identity(ctx_, n); }

    PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) const { return multiply(a, b, reducer()); }

    bool is_square_free() const;
    /// Complex of the square-free ideal; InputError otherwise.
    SimplicialComplex complex() const;
    /// Variables X_i that are themselves generators.
    VertexSet killed_variables() const;
    /// Variables that are neither generators nor absent: X_i survives.
    VertexSet live_variables() const;
    /// True iff every generator is a single variable, i.e. a polynomial ring in the live variables.
    bool is_polynomial_ring() const;

    std::vector<Polynomial> generator_polynomials() const;
    std::string describe() const;

    friend bool operator==(const QuotientRing& a, const QuotientRing& b);

private:
    ContextPtr ctx_;
    std::vector<Monomial> gens_;
};

/// Entry-wise normal form in R is the identity on normal forms of R.
bool is_normal(const QuotientRing& ring, const PolyMatrix& m);

/// Raised by hom_check; carries the offending generator and its image.
class HomCheckError : public InputError {
public:
    HomCheckError(std::string generator, std::string image);
    const std::string& generator() const { return generator_; }
    const std::string& image() const { return image_; }

private:
    std::string generator_;
    std::string image_;
};

/// k-algebra map source -> target given by the images of the variables.
class RingHom {
public:
    RingHom(QuotientRing source, QuotientRing target, std::vector<Polynomial> images);

    /// X_i -> X_i; well defined iff the source ideal lies in the target ideal.
    static RingHom natural(const QuotientRing& source, const QuotientRing& target);
    /// X_i -> 0 for i in `killed`, X_i -> X_i otherwise.
    static RingHom killing(const QuotientRing& source, const QuotientRing& target, VertexSet killed);
    /// All variables to zero: the augmentation onto the base field.
    static RingHom augmentation(const QuotientRing& source);

    const QuotientRing& source() const { return source_; }
    const QuotientRing& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }
    bool verified() const { return verified_; }

    Polynomial apply(const Polynomial& f) const;
    PolyMatrix apply(const PolyMatrix& m) const;

    friend RingHom hom_check(RingHom h);
    friend bool operator==(const RingHom& a, const RingHom& b);

private:
    QuotientRing source_;
    QuotientRing target_;
    std::vector<Polynomial> images_;
    // image index per variable when every image is 0 or a bare variable
    std::vector<long> variable_map_;
    bool monomial_map_ = false;
    bool verified_ = false;
};

/// Verifies that every source generator maps to zero; throws HomCheckError otherwise.
RingHom hom_check(RingHom h);

/// g ∘ f, requiring f.target == g.source.
RingHom compose(const RingHom& g, const RingHom& f);

} // namespace srpb
