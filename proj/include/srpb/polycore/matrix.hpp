#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "srpb/polycore/polynomial.hpp"

namespace srpb {

/// Optional entry reducer applied after every product (e.g. a quotient normal form).
using Reducer = std::function<Polynomial(const Polynomial&)>;

/// Dense row-major matrix of polynomials over one variable context.
class PolyMatrix {
public:
    PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols);
    PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    static PolyMatrix identity(ContextPtr ctx, std::size_t n);
    /// I + f * e_{row,col}, row != col.
    static PolyMatrix elementary(ContextPtr ctx, std::size_t n, std::size_t row, std::size_t col,
                                 const Polynomial& f);
    static PolyMatrix diagonal(ContextPtr ctx, std::span<const Polynomial> diag);
    /// [[a, 0], [0, b]]
    static PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

    const ContextPtr& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Polynomial>& entries() const { return entries_; }

    PolyMatrix transpose() const;
    PolyMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& fn) const;
    bool is_constant() const;
    bool is_zero() const;
    bool is_identity() const;

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Reducer& reduce);
/// Product of a chain of matrices, reducing after each step.
PolyMatrix multiply_all(std::span<const PolyMatrix> factors, const Reducer& reduce);
PolyMatrix scale(const PolyMatrix& m, const Polynomial& f);

/// Cofactor expansion with memoized minors.
Polynomial determinant(const PolyMatrix& m, const Reducer& reduce = {});
/// adj(M) with M * adj(M) = det(M) * I.
PolyMatrix adjugate(const PolyMatrix& m, const Reducer& reduce = {});

PolyMatrix substitute(const PolyMatrix& m, std::span<const Polynomial> images);

} // namespace srpb
