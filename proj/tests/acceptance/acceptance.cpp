// Acceptance run: one PASS/FAIL line per criterion. SRPB_SEED fixes the corpus.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "srpb/cli/app.hpp"
#include "srpb/cli/verify.hpp"
#include "srpb/groebner.hpp"
#include "srpb/polycore/smith.hpp"
#include "../engine_support.hpp"

using namespace srpb;
using namespace srpb::testing;

namespace {

struct Tally {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures++ == 0)
            first = what;
    }
};

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome from(const Tally& t, const std::string& what)
{
    if (t.failures == 0)
        return {true, std::to_string(t.cases) + " " + what};
    return {false, std::to_string(t.failures) + "/" + std::to_string(t.cases) + " failed; first: " + t.first};
}

std::uint64_t corpus_seed()
{
    if (const char* s = std::getenv("SRPB_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 20240607;
}

// certificates collected along the way for the mutation run
std::vector<json> corpus_certificates;

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t degree)
{
    std::vector<Monomial> out;
    Monomial m(nvars);
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t left) -> void {
        if (v == nvars) {
            out.push_back(m);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            m[v] = e;
            self(self, v + 1, left - e);
        }
        m[v] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

// Basis count of A(Σ) up to a degree: monomials whose support is a face.
std::size_t face_monomials(const SimplicialComplex& c, std::uint32_t degree)
{
    std::size_t n = 0;
    for (const auto& m : monomials_up_to(c.ambient(), degree))
        n += c.is_face(m.support());
    return n;
}

std::vector<SimplicialComplex> corpus_complexes()
{
    return {
        complex_of(2, {{0}, {1}}),
        complex_of(3, {{0, 1}, {1, 2}, {0, 2}}),
        complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
        complex_of(4, {{0, 1, 2}, {2, 3}}),
        complex_of(3, {{0}, {1, 2}}),
    };
}

Invertible random_unit(std::mt19937_64& rng, const QuotientRing& ring, std::size_t n, int length,
                       std::uint32_t degree = 2)
{
    auto ctx = ring.context();
    Invertible out{ring.identity(n), ring.identity(n)};
    if (n > 1) {
        auto c = random_conjugator(rng, ring, n, length, degree);
        out = {c.g, c.ginv};
    }
    // constant diagonal unit
    std::vector<Polynomial> d, dinv;
    for (std::size_t i = 0; i < n; ++i) {
        long v = 1 + long(rng() % 3);
        if (rng() % 2)
            v = -v;
        auto s = Scalar(ring.field(), v);
        d.push_back(Polynomial::constant(ctx, s));
        dinv.push_back(Polynomial::constant(ctx, s.inverse()));
    }
    out.matrix = ring.mul(out.matrix, PolyMatrix::diagonal(ctx, d));
    out.inverse = ring.mul(PolyMatrix::diagonal(ctx, dinv), out.inverse);
    return out;
}

Polynomial trace(const PolyMatrix& m)
{
    Polynomial t(m.context());
    for (std::size_t i = 0; i < m.rows(); ++i)
        t += m(i, i);
    return t;
}

// ---------------------------------------------------------------------------

Outcome stanley_reisner_soundness(std::mt19937_64& rng)
{
    Tally t;
    auto scan = [&](const SimplicialComplex& c, const std::vector<Monomial>& monos) {
        auto ctx = make_context(Field::rationals(), c.ambient());
        auto ring = QuotientRing::stanley_reisner(ctx, c);
        const auto& gens = ring.generators();
        for (const auto& m : monos) {
            auto f = Polynomial::term(ctx, Scalar(ctx->field, 1), m);
            bool survives = !ring.normal_form(f).is_zero();
            bool divisible = division_oracle(f, gens).is_zero();
            bool face = c.is_face(m.support());
            if (survives != face || divisible == face) {
                t.check(false, c.to_string() + " at monomial " + f.to_string());
                return;
            }
        }
        t.check(true, {});
    };
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto monos = monomials_up_to(n, 4);
        for (const auto& c : all_complexes(n)) {
            scan(c, monos);
            ++exhaustive;
        }
    }
    auto monos6 = monomials_up_to(6, 4);
    for (int i = 0; i < 200; ++i)
        scan(random_complex(rng, 6), monos6);
    return from(t, "complexes (" + std::to_string(exhaustive) + " exhaustive, 200 random on 6 vertices)");
}

Outcome cartesian_square(std::mt19937_64& rng)
{
    Tally t;
    std::vector<SimplicialComplex> corpus;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto& c : all_complexes(n))
            corpus.push_back(c);
    for (int i = 0; i < 100; ++i)
        corpus.push_back(random_complex(rng, 5 + i % 2));
    std::size_t squares = 0;
    for (const auto& c : corpus) {
        if (is_simplex(c))
            continue;
        ++squares;
        auto d = vorst_decompose(c);
        t.check(decomposition_holds(c, d), "decomposition of " + c.to_string());
        auto sq = build_vorst_square(Field::rationals(), c);
        auto rep = fiber_check(sq, 4);
        t.check(rep.ok, "fiber check of " + c.to_string() + ": " + rep.failure.value_or(""));
        t.check(rep.basis_a == face_monomials(c, 4) && rep.basis_a1 == face_monomials(sq.sigma1, 4) &&
                    rep.basis_a2 == face_monomials(cone(sq.sigma2, sq.apex), 4) &&
                    rep.basis_a0 == face_monomials(sq.sigma2, 4),
                "basis counts of " + c.to_string());
    }
    auto counts = [&](const SimplicialComplex& c, std::uint32_t degree, std::size_t a, std::size_t a1,
                      std::size_t a2, std::size_t a0) {
        auto sq = build_vorst_square(Field::rationals(), c);
        auto rep = fiber_check(sq, degree);
        t.check(rep.ok && rep.basis_a == a && rep.basis_a1 == a1 && rep.basis_a2 == a2 && rep.basis_a0 == a0 &&
                    face_monomials(c, degree) == a,
                "counts for " + c.to_string());
    };
    counts(complex_of(2, {{0}, {1}}), 3, 7, 4, 4, 1);
    counts(complex_of(3, {{0, 1}, {1, 2}, {0, 2}}), 2, 10, 6, 9, 5);
    return from(t, "checks over " + std::to_string(squares) + " squares, including 7 = 4+4-1 and 10 = 6+9-5");
}

Outcome milnor_patching(std::mt19937_64& rng)
{
    Tally t;
    auto complexes = corpus_complexes();
    for (int i = 0; i < 50; ++i) {
        const auto& c = complexes[i % complexes.size()];
        auto sq = build_vorst_square(Field::rationals(), c);
        auto ctx = sq.A.context();
        std::size_t r = 1 + rng() % 3;
        auto sigma = random_unit(rng, sq.A0, r, 1 + rng() % 4);
        auto e = milnor_patch(sq, sigma).idempotent();
        auto u = whitehead_lift(sigma, sq.j2, sq.section);
        auto top = PolyMatrix::block_diagonal(sq.A.identity(r), PolyMatrix(ctx, r, r));
        auto e2 = sq.A2.mul(sq.A2.mul(u.matrix, top), u.inverse);
        auto tag = c.to_string() + " r=" + std::to_string(r);
        t.check(sq.A.normal_form(sq.A.mul(e, e) - e).is_zero(), "E^2 != E over " + tag);
        t.check(sq.A1.normal_form(sq.i1.apply(e)) == sq.A1.normal_form(top), "i1(E) over " + tag);
        t.check(sq.A2.normal_form(sq.i2.apply(e)) == e2, "i2(E) over " + tag);
        auto tr = trace(RingHom::augmentation(sq.A).apply(e));
        t.check(tr == Polynomial::constant(ctx, long(r)) && rank(ProjModule(sq.A, e)) == r, "rank over " + tag);
        if (i < 10)
            corpus_certificates.push_back(patch_certificate(sq, sigma, ProjModule(sq.A, e)));
    }
    return from(t, "patches");
}

Outcome extendedness(std::mt19937_64& rng)
{
    Tally t;
    auto ctx2 = vars(2);
    auto xy = quotient(ctx2, {"x0*x1"});
    auto ctx3 = vars(3);
    auto hollow = QuotientRing::stanley_reisner(ctx3, complex_of(3, {{0, 1}, {1, 2}, {0, 2}}));
    std::size_t certified = 0;
    for (int i = 0; i < 50; ++i) {
        const auto& ring = i % 2 ? hollow : xy;
        auto ctx = ring.context();
        std::size_t n = 2 + rng() % 2;
        std::size_t s = 1 + rng() % (n - 1);
        auto c = random_conjugator(rng, ring, n, 1 + rng() % 4, 2);
        auto d = rank_diagonal(ctx, n, s);
        ProjModule p(ring, ring.mul(ring.mul(c.g, d), c.ginv));
        // bivariate leaves of the hollow triangle need the caller's witness
        auto res = i % 2 ? extend_witness(p, conjugation_oracle(c, d)) : extend_witness(p);
        auto tag = ring.describe() + " #" + std::to_string(i);
        t.check(res.ok() && res.certificate["status"] == "complete", "no certificate for " + tag);
        if (!res.ok())
            continue;
        auto report = verify_certificate(res.certificate);
        t.check(report.ok, "verifier rejects " + tag + ": " + report.summary());
        t.check(trace(res.iso->target.idempotent()) == Polynomial::constant(ctx, long(s)), "rank of " + tag);
        certified += report.ok;
        if (i < 20)
            corpus_certificates.push_back(res.certificate);
    }
    return from(t, "checks; " + std::to_string(certified) + "/50 certificates verified");
}

PolyMatrix matrix_from(const json& cert, std::size_t id, const ContextPtr& ctx)
{
    const auto& m = cert["matrices"][id];
    std::vector<Polynomial> entries;
    for (const auto& e : m["entries"])
        entries.push_back(parse_expression(ctx, e.get<std::string>()));
    return PolyMatrix(ctx, m["rows"], m["cols"], std::move(entries));
}

std::optional<std::size_t> find_claim(const json& node, const std::string& type, const std::string& key)
{
    for (const auto& c : node["claims"])
        if (c["type"] == type)
            return c[key].get<std::size_t>();
    for (const auto& child : node["children"])
        if (auto id = find_claim(child, type, key))
            return id;
    return std::nullopt;
}

Outcome unimodular_rows(std::mt19937_64& rng)
{
    Tally t;
    for (int i = 0; i < 30; ++i) {
        auto ctx = vars(2, i < 15 ? Field::rationals() : Field::prime(5));
        auto R = QuotientRing::polynomial_ring(ctx);
        auto RJ = quotient(ctx, {"x0*x1"});
        auto pi = hom_check(RingHom::natural(R, RJ));
        auto m = random_conjugator(rng, R, 3, 1 + rng() % 5, 2);
        auto v = make_um_row(RJ, RJ.normal_form(m.g.block(0, 0, 1, 3)));
        auto tag = ctx->field.name() + " #" + std::to_string(i);
        t.check(v.has_value(), "row is not unimodular: " + tag);
        if (!v)
            continue;
        auto res = umrow_lift(*v, pi);
        t.check(res.ok(), "lift failed for " + tag);
        if (!res.ok())
            continue;
        const auto& u = *res.lifted;
        t.check(RJ.normal_form(u.v) == v->v, "u mod J != v for " + tag);
        t.check(R.mul(u.v, u.w.transpose()).is_identity(), "u*w'^T != 1 for " + tag);
        auto sid = find_claim(res.certificate["root"], "gl_lift", "sigma");
        t.check(sid.has_value(), "no transport matrix in certificate for " + tag);
        if (sid) {
            auto sigma = matrix_from(res.certificate, *sid, ctx);
            auto v0 = RingHom::augmentation(RJ).apply(v->v);
            t.check(RJ.mul(v->v, sigma) == v0, "v*sigma != v(0) for " + tag);
        }
        t.check(verify_certificate(res.certificate).ok, "verifier rejects " + tag);
        if (i % 3 == 0)
            corpus_certificates.push_back(res.certificate);
    }
    return from(t, "checks over 30 rows (15 over Q, 15 over F5)");
}

Outcome gl_lift_slice(std::mt19937_64& rng)
{
    Tally t;
    struct Case {
        ContextPtr ctx;
        std::vector<std::string> ideal;
    };
    std::vector<Case> cases = {{vars(2), {"x0*x1"}},
                               {vars(3), {"x0*x1*x2"}},
                               {vars(2, Field::prime(5)), {"x0*x1"}}};
    std::map<std::string, std::size_t> used;
    for (int i = 0; i < 30; ++i) {
        const auto& cs = cases[i % cases.size()];
        auto R = QuotientRing::polynomial_ring(cs.ctx);
        auto T = quotient(cs.ctx, cs.ideal);
        auto pi = hom_check(RingHom::natural(R, T));
        std::size_t n = 2 + rng() % 2;
        auto d0 = random_unit(rng, R, n, 1 + rng() % 4, 2);
        Invertible sigma{T.normal_form(d0.matrix), T.normal_form(d0.inverse)};
        auto res = lift_gl(sigma, pi);
        auto tag = T.describe() + " #" + std::to_string(i);
        t.check(res.ok(), "no lift for " + tag + ": " + res.diagnostics());
        if (!res.ok())
            continue;
        ++used[to_string(*res.used)];
        t.check(T.normal_form(res.lift->matrix) == sigma.matrix, "pi(delta) != sigma for " + tag);
        t.check(R.mul(res.lift->matrix, res.lift->inverse).is_identity(), "delta*delta^-1 != I for " + tag);
        if (i < 6)
            corpus_certificates.push_back(gl_lift_certificate(pi, sigma, res));
    }

    // adversarial: the command must report exhaustion, never a lift
    auto dir = std::filesystem::temp_directory_path() / ("srpb-acc-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "r.json") << R"({"field": "Q", "vars": 3, "ideal": []})";
    std::ofstream(dir / "s.json") << R"({"ring": {"field": "Q", "vars": 3, "ideal": ["x0*x1*x2"]},
        "rows": 2, "cols": 2, "entries": ["1 + x1*x2", "x0 + x1^2", "-x2^2", "1 - x1*x2 - x0*x2^2"]})";
    std::ostringstream out, err;
    int code = run_command({"gl", "lift", "--sigma", (dir / "s.json").string(), "--ring", (dir / "r.json").string()},
                           out, err);
    std::filesystem::remove_all(dir);
    auto doc = json::parse(out.str(), nullptr, false);
    t.check(code == exit_exhausted, "adversarial sigma exited with " + std::to_string(code));
    t.check(!doc.is_discarded() && !find_claim(doc["root"], "gl_lift", "delta"), "adversarial sigma claims a lift");

    std::string mix;
    for (const auto& [k, v] : used)
        mix += (mix.empty() ? "" : ", ") + k + " " + std::to_string(v);
    return from(t, "checks; strategies used: " + mix + "; adversarial case exits 3");
}

Outcome groebner_certificates(std::mt19937_64& rng)
{
    Tally t;
    std::size_t members = 0;
    for (int i = 0; i < 100; ++i) {
        auto ctx = vars(1 + rng() % 3);
        std::vector<Polynomial> gens;
        std::size_t k = 1 + rng() % 3;
        for (std::size_t j = 0; j < k; ++j) {
            auto g = random_poly(rng, ctx, 3, 3);
            if (!g.is_zero())
                gens.push_back(g);
        }
        if (gens.empty())
            gens.push_back(Polynomial::variable(ctx, 0));
        Polynomial f(ctx);
        for (const auto& g : gens)
            f += random_poly(rng, ctx, 2, 2) * g;
        bool constructed = i % 2 == 0;
        if (!constructed)
            f += random_poly(rng, ctx, 3, 2);
        auto cert = member(f, std::span<const Polynomial>(gens));
        if (constructed)
            t.check(cert.has_value(), "constructed member not recognised: " + f.to_string());
        if (!cert)
            continue;
        ++members;
        Polynomial sum(ctx);
        for (std::size_t j = 0; j < gens.size(); ++j)
            sum += cert->coefficients[j] * gens[j];
        t.check(sum == f, "sum c_i g_i != f for " + f.to_string());
    }
    std::size_t agree = 0;
    for (int i = 0; i < 100; ++i) {
        auto ctx = vars(1 + rng() % 3);
        std::vector<Monomial> monos;
        std::vector<Polynomial> gens;
        std::size_t k = 1 + rng() % 3;
        for (std::size_t j = 0; j < k; ++j) {
            Monomial m(ctx->nvars);
            auto d = 1 + rng() % 3;
            for (std::size_t e = 0; e < d; ++e)
                m[rng() % ctx->nvars] += 1;
            monos.push_back(m);
            gens.push_back(Polynomial::term(ctx, Scalar(ctx->field, 1), m));
        }
        auto f = random_poly(rng, ctx, 3, 3);
        auto cert = member(f, std::span<const Polynomial>(gens));
        bool oracle = division_oracle(f, monos).is_zero();
        t.check(cert.has_value() == oracle, "membership disagrees with the divisibility scan on " + f.to_string());
        agree += cert.has_value() == oracle;
        if (cert)
            t.check(certificate_holds(*cert, gens), "certificate for monomial ideal");
    }
    return from(t, "checks; " + std::to_string(members) + " certificates exact; monomial agreement " +
                       std::to_string(agree) + "/100");
}

Outcome whitehead_and_smith(std::mt19937_64& rng)
{
    Tally t;
    auto complexes = corpus_complexes();
    for (int i = 0; i < 50; ++i) {
        auto sq = build_vorst_square(Field::rationals(), complexes[i % complexes.size()]);
        std::size_t r = 1 + rng() % 3;
        auto sigma = random_unit(rng, sq.A0, r, 1 + rng() % 4);
        auto u = whitehead_lift(sigma, sq.j2, sq.section);
        t.check(sq.A0.normal_form(sq.j2.apply(u.matrix)) == PolyMatrix::block_diagonal(sigma.matrix, sigma.inverse),
                "j2(U) != sigma + sigma^-1");
        t.check(sq.A2.mul(u.matrix, u.inverse).is_identity(), "U*U^-1 != I");
    }
    auto ctx = vars(1);
    for (int i = 0; i < 50; ++i) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        auto m = random_matrix(rng, ctx, rows, cols, 3);
        auto sf = smith_normal_form(m);
        t.check(sf.U * m * sf.V == sf.D, "U*M*V != D");
        bool diagonal = true, chain = true;
        for (std::size_t a = 0; a < rows; ++a)
            for (std::size_t b = 0; b < cols; ++b)
                diagonal = diagonal && (a == b || sf.D(a, b).is_zero());
        std::size_t k = std::min(rows, cols);
        for (std::size_t a = 0; a + 1 < k; ++a) {
            const auto& d = sf.D(a, a);
            const auto& e = sf.D(a + 1, a + 1);
            if (d.is_zero())
                chain = chain && e.is_zero();
            else
                chain = chain && divmod_univariate(e, d).second.is_zero();
        }
        t.check(diagonal && chain, "D is not a divisibility chain: " + sf.D.to_string());
        auto du = leibniz_det(sf.U), dv = leibniz_det(sf.V);
        t.check(du.is_constant() && !du.is_zero() && dv.is_constant() && !dv.is_zero(), "U or V not unimodular");
        t.check((sf.U * sf.U_inv).is_identity() && (sf.V * sf.V_inv).is_identity(), "Smith inverses");
    }
    return from(t, "checks (50 Whitehead lifts, 50 Smith forms)");
}

// Adds one to a single coefficient of a single entry (a zero entry becomes 1).
json mutate(const json& cert, std::mt19937_64& rng, std::string& where)
{
    json out = cert;
    auto& matrices = out["matrices"];
    auto id = rng() % matrices.size();
    auto& m = matrices[id];
    auto k = rng() % m["entries"].size();
    const auto& ring = out["rings"][m["ring"].get<std::string>()];
    auto ctx = make_context(Field::parse(ring["field"].get<std::string>()), ring["vars"].get<std::size_t>());
    auto f = parse_expression(ctx, m["entries"][k].get<std::string>());
    if (f.is_zero()) {
        f = Polynomial::constant(ctx, 1);
    } else {
        auto terms = f.terms();
        auto& term = terms[rng() % terms.size()];
        f += Polynomial::term(ctx, Scalar(ctx->field, 1), term.mono);
    }
    m["entries"][k] = f.to_string();
    where = "matrix " + std::to_string(id) + " entry " + std::to_string(k);
    return out;
}

Outcome mutation_sensitivity(std::mt19937_64& rng)
{
    Tally t;
    if (corpus_certificates.empty())
        return {false, "no corpus certificates were produced"};
    for (const auto& cert : corpus_certificates)
        t.check(verify_certificate(cert).ok, "unmutated corpus certificate fails");
    std::map<std::string, std::size_t> caught;
    for (int i = 0; i < 200; ++i) {
        const auto& cert = corpus_certificates[rng() % corpus_certificates.size()];
        std::string where;
        auto bad = mutate(cert, rng, where);
        auto report = verify_certificate(bad);
        bool named = report.failure && !report.failure->node.empty() && !report.failure->claim.empty() &&
                     !report.failure->message.empty();
        t.check(!report.ok && named, "mutation survived in a " + cert["kind"].get<std::string>() +
                                         " certificate at " + where);
        if (report.failure)
            ++caught[report.failure->claim];
    }
    std::string mix;
    for (const auto& [k, v] : caught)
        mix += (mix.empty() ? "" : ", ") + k + " " + std::to_string(v);
    return from(t, "checks over " + std::to_string(corpus_certificates.size()) + " certificates; caught by " + mix);
}

std::vector<std::string> determinism_corpus(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    auto ctx2 = vars(2);
    auto xy = quotient(ctx2, {"x0*x1"});
    for (int i = 0; i < 5; ++i) {
        auto c = random_conjugator(rng, xy, 3, 4);
        ProjModule p(xy, xy.mul(xy.mul(c.g, rank_diagonal(ctx2, 3, 1 + rng() % 2)), c.ginv));
        out.push_back(dump_certificate(extend_witness(p).certificate));
    }
    auto R = QuotientRing::polynomial_ring(ctx2);
    auto pi = hom_check(RingHom::natural(R, xy));
    for (int i = 0; i < 3; ++i) {
        auto m = random_conjugator(rng, R, 3, 4);
        if (auto v = make_um_row(xy, xy.normal_form(m.g.block(0, 0, 1, 3))))
            out.push_back(dump_certificate(umrow_lift(*v, pi).certificate));
    }
    auto sq = build_vorst_square(Field::rationals(), complex_of(3, {{0, 1}, {1, 2}, {0, 2}}));
    for (int i = 0; i < 3; ++i) {
        auto sigma = random_unit(rng, sq.A0, 2, 3);
        out.push_back(dump_certificate(patch_certificate(sq, sigma, milnor_patch(sq, sigma))));
    }
    return out;
}

Outcome determinism(std::uint64_t seed)
{
    auto a = determinism_corpus(seed);
    auto b = determinism_corpus(seed);
    std::size_t bytes = 0;
    for (const auto& s : a)
        bytes += s.size();
    if (a != b)
        return {false, "certificates differ between runs"};
    return {true, std::to_string(a.size()) + " certificates, " + std::to_string(bytes) + " bytes identical"};
}

} // namespace

int main()
{
    const auto seed = corpus_seed();
    std::cout << "seed " << seed << "\n";
    struct Criterion {
        int id;
        const char* name;
        double budget; // seconds
        std::function<Outcome(std::mt19937_64&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "Stanley-Reisner soundness", 10, stanley_reisner_soundness},
        {2, "Cartesian square", 30, cartesian_square},
        {3, "Milnor patching", 60, milnor_patching},
        {4, "extendedness certificates", 120, extendedness},
        {5, "unimodular row lifting", 120, unimodular_rows},
        {6, "GL lift slice", 120, gl_lift_slice},
        {7, "Groebner certificates", 60, groebner_certificates},
        {8, "Whitehead and Smith kernels", 60, whitehead_and_smith},
        {9, "verifier mutation sensitivity", 60, mutation_sensitivity},
        {10, "determinism", 60, [seed](std::mt19937_64&) { return determinism(seed); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::mt19937_64 rng(seed + std::uint64_t(c.id));
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(rng);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass && secs < c.budget;
        failed += !pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (pass ? "PASS " : "FAIL ") << c.id << ". " << c.name << ": " << o.detail << " [" << secs
             << "s, limit " << c.budget << "s]";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
              << "\n";
    return failed ? 1 : 0;
}
