#include "srpb/polycore/smith.hpp"

#include "srpb/errors.hpp"

#include <optional>

namespace srpb {

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const PolyMatrix& m)
        : a_(m),
          u_(PolyMatrix::identity(m.context(), m.rows())),
          u_inv_(u_),
          v_(PolyMatrix::identity(m.context(), m.cols())),
          v_inv_(v_)
    {
    }

    SmithForm run()
    {
        const auto steps = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < steps; ++t) {
            if (!settle_pivot(t))
                break;
            const auto& lc = a_(t, t).lead().coeff;
            if (!lc.is_one())
                row_scale(t, lc.inverse());
        }
        return {std::move(u_), std::move(u_inv_), std::move(a_), std::move(v_), std::move(v_inv_)};
    }

private:
    // Returns false when the trailing block is zero.
    bool settle_pivot(std::size_t t)
    {
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            std::uint64_t best_deg = 0;
            for (std::size_t i = t; i < a_.rows(); ++i)
                for (std::size_t j = t; j < a_.cols(); ++j) {
                    const auto& e = a_(i, j);
                    if (!e.is_zero() && (!best || e.total_degree() < best_deg)) {
                        best = {i, j};
                        best_deg = e.total_degree();
                    }
                }
            if (!best)
                return false;
            if (best->first != t)
                row_swap(t, best->first);
            if (best->second != t)
                col_swap(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t).is_zero())
                    continue;
                auto [q, r] = divmod_univariate(a_(i, t), a_(t, t));
                row_add(i, t, -q);
                clean = clean && r.is_zero();
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j).is_zero())
                    continue;
                auto [q, r] = divmod_univariate(a_(t, j), a_(t, t));
                col_add(j, t, -q);
                clean = clean && r.is_zero();
            }
            if (!clean)
                continue;

            bool divides_all = true;
            for (std::size_t i = t + 1; i < a_.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (!a_(i, j).is_zero() && !divmod_univariate(a_(i, j), a_(t, t)).second.is_zero()) {
                        row_add(t, i, Polynomial::constant(a_.context(), 1));
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                return true;
        }
    }

    // row_i += q * row_k
    void row_add(std::size_t i, std::size_t k, const Polynomial& q)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_(i, j) += q * a_(k, j);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(i, j) += q * u_(k, j);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            u_inv_(r, k) -= u_inv_(r, i) * q;
    }

    // col_j += q * col_k
    void col_add(std::size_t j, std::size_t k, const Polynomial& q)
    {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            a_(i, j) += a_(i, k) * q;
        for (std::size_t i = 0; i < v_.rows(); ++i)
            v_(i, j) += v_(i, k) * q;
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            v_inv_(k, c) -= q * v_inv_(j, c);
    }

    void row_swap(std::size_t i, std::size_t k)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            std::swap(a_(i, j), a_(k, j));
        for (std::size_t j = 0; j < u_.cols(); ++j)
            std::swap(u_(i, j), u_(k, j));
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            std::swap(u_inv_(r, i), u_inv_(r, k));
    }

    void col_swap(std::size_t j, std::size_t k)
    {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            std::swap(a_(i, j), a_(i, k));
        for (std::size_t i = 0; i < v_.rows(); ++i)
            std::swap(v_(i, j), v_(i, k));
        for (std::size_t c = 0; c < v_inv_.cols(); ++c)
            std::swap(v_inv_(j, c), v_inv_(k, c));
    }

    void row_scale(std::size_t i, const Scalar& c)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_(i, j) = a_(i, j).scaled(c);
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(i, j) = u_(i, j).scaled(c);
        auto inv = c.inverse();
        for (std::size_t r = 0; r < u_inv_.rows(); ++r)
            u_inv_(r, i) = u_inv_(r, i).scaled(inv);
    }

    PolyMatrix a_;
    PolyMatrix u_;
    PolyMatrix u_inv_;
    PolyMatrix v_;
    PolyMatrix v_inv_;
};

} // namespace

SmithForm smith_normal_form(const PolyMatrix& m)
{
    std::uint64_t mask = 0;
    for (const auto& e : m.entries())
        mask |= e.support();
    if ((mask & (mask - 1)) != 0)
        throw UnsupportedRingError("Smith normal form needs entries in a single variable");
    return SmithReducer(m).run();
}

} // namespace srpb
