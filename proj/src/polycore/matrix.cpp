#include "srpb/polycore/matrix.hpp"

#include "srpb/errors.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace srpb {

namespace {

std::string shape(const PolyMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Polynomial apply(const Reducer& reduce, Polynomial p)
{
    return reduce ? reduce(p) : p;
}

} // namespace

PolyMatrix::PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ctx_))
{
}

PolyMatrix::PolyMatrix(ContextPtr ctx, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                         std::to_string(entries_.size()) + " entries");
    for (const auto& e : entries_)
        if (!same_context(e.context(), ctx_))
            throw ContextError("matrix entry over a different context");
}

PolyMatrix PolyMatrix::identity(ContextPtr ctx, std::size_t n)
{
    PolyMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Polynomial::constant(ctx, 1);
    return m;
}

PolyMatrix PolyMatrix::elementary(ContextPtr ctx, std::size_t n, std::size_t row, std::size_t col,
                                  const Polynomial& f)
{
    if (row == col || row >= n || col >= n)
        throw ShapeError("elementary matrix needs distinct in-range positions");
    auto m = identity(std::move(ctx), n);
    m(row, col) = f;
    return m;
}

PolyMatrix PolyMatrix::diagonal(ContextPtr ctx, std::span<const Polynomial> diag)
{
    PolyMatrix m(ctx, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

PolyMatrix PolyMatrix::block_diagonal(const PolyMatrix& a, const PolyMatrix& b)
{
    if (!same_context(a.ctx_, b.ctx_))
        throw ContextError("block diagonal of matrices over different contexts");
    PolyMatrix m(a.ctx_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
}

PolyMatrix PolyMatrix::transpose() const
{
    PolyMatrix t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

PolyMatrix PolyMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const
{
    if (row0 + rows > rows_ || col0 + cols > cols_)
        throw ShapeError("block outside a " + shape(*this) + " matrix");
    PolyMatrix b(ctx_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& fn) const
{
    std::vector<Polynomial> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(fn(e));
    ContextPtr ctx = out.empty() ? ctx_ : out.front().context();
    return PolyMatrix(ctx, rows_, cols_, std::move(out));
}

bool PolyMatrix::is_constant() const
{
    for (const auto& e : entries_)
        if (!e.is_constant())
            return false;
    return true;
}

bool PolyMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool PolyMatrix::is_identity() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero())
                return false;
    return true;
}

PolyMatrix PolyMatrix::operator-() const
{
    return map([](const Polynomial& p) { return -p; });
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("adding " + shape(a) + " and " + shape(b));
    PolyMatrix out(a);
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        out.entries_[k] += b.entries_[k];
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("subtracting " + shape(a) + " and " + shape(b));
    PolyMatrix out(a);
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        out.entries_[k] -= b.entries_[k];
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    return multiply(a, b, {});
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string PolyMatrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << (*this)(i, j).to_string();
        out << ']';
    }
    out << ']';
    return out.str();
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const Reducer& reduce)
{
    if (a.cols() != b.rows())
        throw ShapeError("multiplying " + shape(a) + " by " + shape(b));
    if (!same_context(a.context(), b.context()))
        throw ContextError("multiplying matrices over different contexts");
    PolyMatrix out(a.context(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Polynomial acc(a.context());
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero())
                    acc += a(i, k) * b(k, j);
            out(i, j) = apply(reduce, std::move(acc));
        }
    return out;
}

PolyMatrix multiply_all(std::span<const PolyMatrix> factors, const Reducer& reduce)
{
    if (factors.empty())
        throw ShapeError("empty matrix product");
    PolyMatrix acc = factors.front().map([&](const Polynomial& p) { return apply(reduce, p); });
    for (std::size_t k = 1; k < factors.size(); ++k)
        acc = multiply(acc, factors[k], reduce);
    return acc;
}

PolyMatrix scale(const PolyMatrix& m, const Polynomial& f)
{
    return m.map([&](const Polynomial& p) { return p * f; });
}

namespace {

// det of the submatrix on rows [row, n) and the columns in `cols` (|cols| = n - row).
class MinorTable {
public:
    MinorTable(const PolyMatrix& m, std::size_t skip_row, std::size_t skip_col, const Reducer& reduce)
        : m_(m), reduce_(reduce)
    {
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != skip_row)
                rows_.push_back(i);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (j != skip_col)
                cols_.push_back(j);
    }

    Polynomial det()
    {
        std::uint32_t all = cols_.empty() ? 0u : (std::uint32_t{1} << cols_.size()) - 1u;
        return eval(0, all);
    }

private:
    Polynomial eval(std::size_t depth, std::uint32_t mask)
    {
        if (depth == rows_.size())
            return Polynomial::constant(m_.context(), 1);
        if (auto it = memo_.find(mask); it != memo_.end())
            return it->second;
        Polynomial acc(m_.context());
        int sign = 1;
        for (std::size_t c = 0; c < cols_.size(); ++c) {
            if (!((mask >> c) & 1u))
                continue;
            const auto& entry = m_(rows_[depth], cols_[c]);
            if (!entry.is_zero()) {
                auto term = entry * eval(depth + 1, mask & ~(std::uint32_t{1} << c));
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        acc = apply(reduce_, std::move(acc));
        memo_.emplace(mask, acc);
        return acc;
    }

    const PolyMatrix& m_;
    const Reducer& reduce_;
    std::vector<std::size_t> rows_;
    std::vector<std::size_t> cols_;
    std::unordered_map<std::uint32_t, Polynomial> memo_;
};

constexpr std::size_t no_index = static_cast<std::size_t>(-1);

} // namespace

Polynomial determinant(const PolyMatrix& m, const Reducer& reduce)
{
    if (!m.is_square())
        throw ShapeError("determinant of a non-square " + shape(m) + " matrix");
    if (m.rows() > 24)
        throw ShapeError("determinant by cofactor expansion limited to 24x24");
    return MinorTable(m, no_index, no_index, reduce).det();
}

PolyMatrix adjugate(const PolyMatrix& m, const Reducer& reduce)
{
    if (!m.is_square())
        throw ShapeError("adjugate of a non-square " + shape(m) + " matrix");
    const auto n = m.rows();
    PolyMatrix adj(m.context(), n, n);
    if (n == 1) {
        adj(0, 0) = Polynomial::constant(m.context(), 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto minor = MinorTable(m, i, j, reduce).det();
            // adj(M)_{ji} = (-1)^{i+j} det(M without row i, column j)
            adj(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return adj;
}

PolyMatrix substitute(const PolyMatrix& m, std::span<const Polynomial> images)
{
    return m.map([&](const Polynomial& p) { return substitute(p, images); });
}

} // namespace srpb
