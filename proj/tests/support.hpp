#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "srpb/polycore/parse.hpp"
#include "srpb/polycore/matrix.hpp"
#include "srpb/quotient/ring.hpp"
#include "srpb/simplicial.hpp"

namespace srpb::testing {

inline ContextPtr vars(std::size_t n, Field field = Field::rationals())
{
    return make_context(field, n);
}

inline Polynomial poly(const ContextPtr& ctx, std::string_view text)
{
    return parse_expression(ctx, text);
}

inline PolyMatrix mat(const ContextPtr& ctx, std::size_t rows, std::size_t cols,
                      const std::vector<std::string>& entries)
{
    std::vector<Polynomial> polys;
    for (const auto& e : entries)
        polys.push_back(parse_expression(ctx, e));
    return PolyMatrix(ctx, rows, cols, std::move(polys));
}

// Monomial ideal from expressions such as "x0*x1".
inline QuotientRing quotient(const ContextPtr& ctx, const std::vector<std::string>& gens)
{
    std::vector<Monomial> monos;
    for (const auto& g : gens)
        monos.push_back(parse_expression(ctx, g).lead().mono);
    return QuotientRing(ctx, std::move(monos));
}

inline SimplicialComplex complex_of(std::size_t ambient, const std::vector<std::vector<std::size_t>>& facets)
{
    return SimplicialComplex::from_facets(ambient, facets);
}

// Random polynomial with small integer coefficients, degree ≤ max_degree,
// only in the variables of `allowed` (bitmask).
inline Polynomial random_poly(std::mt19937_64& rng, const ContextPtr& ctx, std::uint32_t max_degree,
                              std::size_t max_terms, std::uint64_t allowed = ~std::uint64_t{0})
{
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < ctx->nvars; ++v)
        if (allowed >> v & 1)
            pool.push_back(v);
    Polynomial f(ctx);
    std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    auto count = nterms(rng);
    for (std::size_t t = 0; t < count; ++t) {
        Monomial m(ctx->nvars);
        auto d = deg(rng);
        for (std::uint32_t k = 0; k < d && !pool.empty(); ++k)
            m[pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]] += 1;
        f += Polynomial::term(ctx, Scalar(ctx->field, coeff(rng)), m);
    }
    return f;
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, const ContextPtr& ctx, std::size_t rows, std::size_t cols,
                                std::uint32_t max_degree, std::uint64_t allowed = ~std::uint64_t{0})
{
    PolyMatrix m(ctx, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = random_poly(rng, ctx, max_degree, 3, allowed);
    return m;
}

// Oracle: repeatedly strip terms whose exponent vector dominates a generator's.
inline Polynomial division_oracle(const Polynomial& f, const std::vector<Monomial>& gens)
{
    Polynomial out(f.context());
    for (const auto& t : f.terms()) {
        bool dead = false;
        for (const auto& g : gens) {
            bool dominates = true;
            for (std::size_t v = 0; v < g.size(); ++v)
                dominates = dominates && t.mono[v] >= g[v];
            dead = dead || dominates;
        }
        if (!dead)
            out += Polynomial::term(f.context(), t.coeff, t.mono);
    }
    return out;
}

// Oracle: Leibniz permutation sum.
inline Polynomial leibniz_det(const PolyMatrix& m)
{
    const auto n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    Polynomial det(m.context());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        auto term = Polynomial::constant(m.context(), inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i)
            term = term * m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Every downward-closed family on `n` vertices, each as a complex (exhaustive; n ≤ 5).
inline std::vector<SimplicialComplex> all_complexes(std::size_t n)
{
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<SimplicialComplex> out;
    std::vector<bool> in(subsets, false);
    in[0] = true;
    // faces in increasing bit order; choose membership when all codim-1 subsets are in
    std::vector<std::size_t> order;
    for (std::size_t s = 1; s < subsets; ++s)
        order.push_back(s);
    std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    auto emit = [&] {
        std::vector<VertexSet> faces;
        for (std::size_t s = 0; s < subsets; ++s)
            if (in[s])
                faces.push_back(s);
        out.emplace_back(n, faces);
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            emit();
            return;
        }
        auto s = order[k];
        bool allowed = true;
        for (std::size_t v = 0; v < n; ++v)
            if (s >> v & 1)
                allowed = allowed && in[s & ~(std::size_t{1} << v)];
        self(self, k + 1);
        if (allowed) {
            in[s] = true;
            self(self, k + 1);
            in[s] = false;
        }
    };
    rec(rec, 0);
    return out;
}

// Random downward-closed complex on n vertices: random facet candidates closed downward.
inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<std::size_t> count(1, 5);
    std::uniform_int_distribution<VertexSet> pick(0, (VertexSet{1} << n) - 1);
    std::vector<VertexSet> facets;
    auto k = count(rng);
    for (std::size_t i = 0; i < k; ++i)
        facets.push_back(pick(rng));
    return SimplicialComplex(n, facets);
}

} // namespace srpb::testing
