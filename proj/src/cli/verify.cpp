#include "srpb/cli/verify.hpp"

#include <map>
#include <set>
#include <sstream>

#include "srpb/polycore/parse.hpp"
#include "srpb/quotient/square.hpp"

namespace srpb {

using nlohmann::json;

namespace {

struct ClaimFailure {
    std::string message;
    std::string lhs;
    std::string rhs;
};

[[noreturn]] void fail(std::string message, std::string lhs = {}, std::string rhs = {})
{
    throw ClaimFailure{std::move(message), std::move(lhs), std::move(rhs)};
}

void require(bool cond, const std::string& message)
{
    if (!cond)
        fail(message);
}

struct TableMatrix {
    std::string ring;
    PolyMatrix m;
};

class Verifier {
public:
    explicit Verifier(const json& doc) : doc_(doc) {}

    VerifierReport run();

private:
    const json& doc_;
    VerifierReport report_;
    std::map<std::string, ContextPtr> contexts_;
    std::map<std::string, QuotientRing> rings_;
    std::map<std::string, RingHom> homs_;
    std::map<std::string, FiberSquare> squares_;
    std::vector<TableMatrix> matrices_;
    std::set<std::size_t> pinned_;

    void record(const std::string& node, const std::string& claim, const ClaimFailure& f);

    ContextPtr context_for(const Field& field, std::size_t vars);
    void load_rings();
    void load_homs();
    void load_matrices();
    void load_squares();

    const QuotientRing& ring(const json& name);
    const RingHom& hom(const json& name);
    const FiberSquare& square(const json& name);
    const TableMatrix& matrix(const json& id);
    const PolyMatrix& matrix_in(const json& id, const QuotientRing& r, const char* role);

    void equal(const PolyMatrix& lhs, const PolyMatrix& rhs, const std::string& what);
    PolyMatrix product(const QuotientRing& r, const PolyMatrix& a, const PolyMatrix& b);

    void check_claim(const json& claim);
    void check_linear(const json& claim);
    void walk(const json& node, const std::string& path);
};

void Verifier::record(const std::string& node, const std::string& claim, const ClaimFailure& f)
{
    report_.ok = false;
    if (!report_.failure)
        report_.failure = VerifierFailure{node, claim, f.message, f.lhs, f.rhs};
}

ContextPtr Verifier::context_for(const Field& field, std::size_t vars)
{
    auto key = field.name() + "/" + std::to_string(vars);
    auto it = contexts_.find(key);
    if (it == contexts_.end())
        it = contexts_.emplace(key, make_context(field, vars)).first;
    return it->second;
}

void Verifier::load_rings()
{
    require(doc_.contains("rings") && doc_["rings"].is_object(), "missing ring table");
    for (const auto& [name, r] : doc_["rings"].items()) {
        require(r.is_object() && r.contains("field") && r.contains("vars") && r.contains("ideal"),
                "ring " + name + " is malformed");
        require(r["vars"].is_number_unsigned() && r["vars"].get<std::size_t>() <= max_variables,
                "ring " + name + " has a bad variable count");
        auto ctx = context_for(Field::parse(r["field"].get<std::string>()), r["vars"].get<std::size_t>());
        std::vector<Monomial> gens;
        for (const auto& g : r["ideal"]) {
            auto f = parse_expression(ctx, g.get<std::string>());
            require(f.terms().size() == 1 && f.lead().coeff.is_one(),
                    "ring " + name + " has a non-monomial generator " + f.to_string());
            gens.push_back(f.lead().mono);
        }
        rings_.emplace(name, QuotientRing(ctx, std::move(gens)));
    }
}

void Verifier::load_homs()
{
    require(doc_.contains("homs") && doc_["homs"].is_object(), "missing hom table");
    for (const auto& [name, h] : doc_["homs"].items()) {
        require(h.is_object() && h.contains("source") && h.contains("target") && h.contains("images"),
                "hom " + name + " is malformed");
        const auto& src = ring(h["source"]);
        const auto& tgt = ring(h["target"]);
        require(h["images"].is_array() && h["images"].size() == src.nvars(),
                "hom " + name + " needs one image per source variable");
        std::vector<Polynomial> images;
        for (const auto& e : h["images"]) {
            auto f = parse_expression(tgt.context(), e.get<std::string>());
            require(tgt.normal_form(f) == f, "hom " + name + " image " + f.to_string() + " is not reduced");
            images.push_back(std::move(f));
        }
        // every source generator must vanish in the target
        for (const auto& g : src.generator_polynomials()) {
            auto img = tgt.normal_form(substitute(g, std::span<const Polynomial>(images)));
            if (!img.is_zero())
                fail("hom " + name + " is not well defined at generator " + g.to_string(), img.to_string(), "0");
        }
        homs_.emplace(name, RingHom(src, tgt, std::move(images)));
    }
}

void Verifier::load_matrices()
{
    require(doc_.contains("matrices") && doc_["matrices"].is_array(), "missing matrix table");
    std::size_t id = 0;
    for (const auto& m : doc_["matrices"]) {
        auto tag = "matrix " + std::to_string(id++);
        require(m.is_object() && m.contains("ring") && m.contains("rows") && m.contains("cols") &&
                    m.contains("entries"),
                tag + " is malformed");
        auto rname = m["ring"].get<std::string>();
        const auto& r = ring(m["ring"]);
        auto rows = m["rows"].get<std::size_t>();
        auto cols = m["cols"].get<std::size_t>();
        require(m["entries"].is_array() && m["entries"].size() == rows * cols, tag + " has the wrong entry count");
        std::vector<Polynomial> entries;
        for (const auto& e : m["entries"]) {
            auto f = parse_expression(r.context(), e.get<std::string>());
            require(r.normal_form(f) == f, tag + " entry " + f.to_string() + " is not reduced");
            entries.push_back(std::move(f));
        }
        matrices_.push_back({rname, PolyMatrix(r.context(), rows, cols, std::move(entries))});
    }
}

void Verifier::load_squares()
{
    if (!doc_.contains("squares"))
        return;
    require(doc_["squares"].is_object(), "square table is malformed");
    for (const auto& [name, s] : doc_["squares"].items()) {
        auto tag = "square " + name;
        const auto& A = ring(s.at("A"));
        const auto& A1 = ring(s.at("A1"));
        const auto& A2 = ring(s.at("A2"));
        const auto& A0 = ring(s.at("A0"));
        auto apex = s.at("apex").get<std::size_t>();
        require(apex < A.nvars(), tag + " apex out of range");
        auto sigma = A.complex();
        require(A1.complex() == deletion(sigma, apex), tag + ": A1 is not the deletion at the apex");
        require(A0.complex() == link(sigma, apex), tag + ": A0 is not the link at the apex");
        require(A2.complex() == cone(A0.complex(), apex), tag + ": A2 is not the cone on the link");

        auto map = [&](const char* key, const QuotientRing& from, const QuotientRing& to,
                       VertexSet killed) -> const RingHom& {
            const auto& h = hom(s.at(key));
            require(h.source() == from && h.target() == to, tag + ": " + key + " has the wrong endpoints");
            for (std::size_t i = 0; i < from.nvars(); ++i) {
                auto want = (killed >> i) & 1 ? to.zero() : to.variable(i);
                if (h.images()[i] != want)
                    fail(tag + ": " + key + " moves x" + std::to_string(i), h.images()[i].to_string(),
                         want.to_string());
            }
            return h;
        };
        VertexSet apex_bit = VertexSet{1} << apex;
        FiberSquare sq{sigma,
                       A1.complex(),
                       A0.complex(),
                       apex,
                       A,
                       A1,
                       A2,
                       A0,
                       map("i1", A, A1, 0),
                       map("i2", A, A2, 0),
                       map("j1", A1, A0, 0),
                       map("j2", A2, A0, apex_bit),
                       map("section", A0, A2, apex_bit)};
        require(square_commutes(sq), tag + " does not commute");
        require(section_splits(sq), tag + ": section is not split by j2");
        auto fiber = fiber_check(sq, 4);
        require(fiber.ok, tag + " is not a fiber product: " + fiber.failure.value_or("basis count mismatch"));
        squares_.emplace(name, std::move(sq));
    }
}

const QuotientRing& Verifier::ring(const json& name)
{
    require(name.is_string(), "ring reference is not a name");
    auto it = rings_.find(name.get<std::string>());
    require(it != rings_.end(), "unknown ring " + name.dump());
    return it->second;
}

const RingHom& Verifier::hom(const json& name)
{
    require(name.is_string(), "hom reference is not a name");
    auto it = homs_.find(name.get<std::string>());
    require(it != homs_.end(), "unknown hom " + name.dump());
    return it->second;
}

const FiberSquare& Verifier::square(const json& name)
{
    require(name.is_string(), "square reference is not a name");
    auto it = squares_.find(name.get<std::string>());
    require(it != squares_.end(), "unknown square " + name.dump());
    return it->second;
}

const TableMatrix& Verifier::matrix(const json& id)
{
    require(id.is_number_unsigned() && id.get<std::size_t>() < matrices_.size(), "bad matrix reference " + id.dump());
    pinned_.insert(id.get<std::size_t>());
    return matrices_[id.get<std::size_t>()];
}

const PolyMatrix& Verifier::matrix_in(const json& id, const QuotientRing& r, const char* role)
{
    const auto& tm = matrix(id);
    require(rings_.at(tm.ring) == r, std::string(role) + " lives in " + tm.ring + ", expected " + r.describe());
    return tm.m;
}

void Verifier::equal(const PolyMatrix& lhs, const PolyMatrix& rhs, const std::string& what)
{
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        fail(what + ": shape mismatch", lhs.to_string(), rhs.to_string());
    if (!(lhs == rhs))
        fail(what, lhs.to_string(), rhs.to_string());
}

PolyMatrix Verifier::product(const QuotientRing& r, const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols() != b.rows())
        fail("shape mismatch in product", std::to_string(a.rows()) + "x" + std::to_string(a.cols()),
             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    return r.mul(a, b);
}

void Verifier::check_linear(const json& claim)
{
    const auto& r = ring(claim.at("ring"));
    const auto& result = matrix_in(claim.at("result"), r, "result");
    std::optional<PolyMatrix> sum;
    for (const auto& term : claim.at("terms")) {
        auto sign = term.at("sign").get<int>();
        require(sign == 1 || sign == -1, "term sign must be 1 or -1");
        std::optional<PolyMatrix> prod;
        for (const auto& f : term.at("factors")) {
            const auto& tm = matrix(f.at("m"));
            const auto& mring = rings_.at(tm.ring);
            PolyMatrix m = tm.m;
            ContextPtr ctx = mring.context();
            if (f.contains("hom")) {
                const auto& h = hom(f["hom"]);
                require(h.source() == mring, "factor does not live in the source of " + f["hom"].get<std::string>());
                m = h.apply(m);
                ctx = h.target().context();
            }
            require(*ctx == *r.context(), "factor is over a different variable context");
            m = r.normal_form(m);
            if (f.value("transpose", false))
                m = m.transpose();
            prod = prod ? product(r, *prod, m) : m;
        }
        require(prod.has_value(), "empty product in linear claim");
        if (sign < 0)
            *prod = -*prod;
        if (sum) {
            require(sum->rows() == prod->rows() && sum->cols() == prod->cols(), "shape mismatch in sum");
            *sum = *sum + *prod;
        } else {
            sum = *prod;
        }
    }
    require(sum.has_value(), "linear claim without terms");
    equal(r.normal_form(*sum), result, "linear combination differs from its result");
}

void Verifier::check_claim(const json& claim)
{
    auto type = claim.at("type").get<std::string>();
    if (type == "idempotent") {
        const auto& tm = matrix(claim.at("m"));
        const auto& r = rings_.at(tm.ring);
        require(tm.m.is_square(), "idempotent is not square");
        equal(product(r, tm.m, tm.m), tm.m, "E*E != E");
    } else if (type == "image") {
        const auto& h = hom(claim.at("hom"));
        const auto& from = matrix_in(claim.at("from"), h.source(), "image source");
        const auto& to = matrix_in(claim.at("to"), h.target(), "image target");
        equal(h.target().normal_form(h.apply(from)), to, "h(from) != to");
    } else if (type == "iso") {
        const auto& tm = matrix(claim.at("source"));
        const auto& r = rings_.at(tm.ring);
        const auto& e = tm.m;
        const auto& f = matrix_in(claim.at("target"), r, "iso target");
        const auto& phi = matrix_in(claim.at("forward"), r, "forward map");
        const auto& psi = matrix_in(claim.at("backward"), r, "backward map");
        equal(product(r, e, e), e, "source is not idempotent");
        equal(product(r, f, f), f, "target is not idempotent");
        require(phi.rows() == f.rows() && phi.cols() == e.rows(), "forward map has the wrong shape");
        require(psi.rows() == e.rows() && psi.cols() == f.rows(), "backward map has the wrong shape");
        equal(product(r, product(r, f, phi), e), phi, "F*phi*E != phi");
        equal(product(r, product(r, e, psi), f), psi, "E*psi*F != psi");
        equal(product(r, psi, phi), e, "psi*phi != E");
        equal(product(r, phi, psi), f, "phi*psi != F");
    } else if (type == "inverse") {
        const auto& tm = matrix(claim.at("m"));
        const auto& r = rings_.at(tm.ring);
        const auto& inv = matrix_in(claim.at("inverse"), r, "inverse");
        require(tm.m.is_square() && inv.rows() == tm.m.rows() && inv.cols() == tm.m.cols(),
                "inverse pair has the wrong shape");
        equal(product(r, tm.m, inv), r.identity(tm.m.rows()), "M*M^-1 != I");
        equal(product(r, inv, tm.m), r.identity(tm.m.rows()), "M^-1*M != I");
    } else if (type == "linear") {
        check_linear(claim);
    } else if (type == "square") {
        square(claim.at("square"));
    } else if (type == "hom") {
        hom(claim.at("hom"));
    } else if (type == "whitehead") {
        const auto& s = square(claim.at("square"));
        const auto& sigma = matrix_in(claim.at("sigma"), s.A0, "sigma");
        const auto& sigma_inv = matrix_in(claim.at("sigma_inverse"), s.A0, "sigma inverse");
        const auto& u = matrix_in(claim.at("u"), s.A2, "u");
        const auto& u_inv = matrix_in(claim.at("u_inverse"), s.A2, "u inverse");
        require(sigma.is_square() && sigma_inv.rows() == sigma.rows() && sigma_inv.cols() == sigma.cols(),
                "sigma pair has the wrong shape");
        auto n = sigma.rows();
        require(u.rows() == 2 * n && u.cols() == 2 * n && u_inv.rows() == 2 * n && u_inv.cols() == 2 * n,
                "u must be 2n x 2n");
        equal(product(s.A0, sigma, sigma_inv), s.A0.identity(n), "sigma*sigma^-1 != I");
        equal(product(s.A2, u, u_inv), s.A2.identity(2 * n), "u*u^-1 != I");
        equal(product(s.A2, u_inv, u), s.A2.identity(2 * n), "u^-1*u != I");
        equal(s.A0.normal_form(s.j2.apply(u)), PolyMatrix::block_diagonal(sigma, sigma_inv),
              "j2(u) != diag(sigma, sigma^-1)");
    } else if (type == "gl_lift") {
        const auto& pi = hom(claim.at("hom"));
        const auto& sigma = matrix_in(claim.at("sigma"), pi.target(), "sigma");
        const auto& sigma_inv = matrix_in(claim.at("sigma_inverse"), pi.target(), "sigma inverse");
        const auto& delta = matrix_in(claim.at("delta"), pi.source(), "delta");
        const auto& delta_inv = matrix_in(claim.at("delta_inverse"), pi.source(), "delta inverse");
        require(sigma.is_square() && delta.rows() == sigma.rows() && delta.cols() == sigma.cols() &&
                    sigma_inv.rows() == sigma.rows() && sigma_inv.cols() == sigma.cols() &&
                    delta_inv.rows() == sigma.rows() && delta_inv.cols() == sigma.cols(),
                "gl lift matrices have inconsistent shapes");
        auto n = sigma.rows();
        equal(product(pi.target(), sigma, sigma_inv), pi.target().identity(n), "sigma*sigma^-1 != I");
        equal(product(pi.source(), delta, delta_inv), pi.source().identity(n), "delta*delta^-1 != I");
        equal(product(pi.source(), delta_inv, delta), pi.source().identity(n), "delta^-1*delta != I");
        equal(pi.target().normal_form(pi.apply(delta)), sigma, "pi(delta) != sigma");
    } else if (type == "unimodular") {
        const auto& tm = matrix(claim.at("v"));
        const auto& r = rings_.at(tm.ring);
        const auto& w = matrix_in(claim.at("w"), r, "w");
        require(tm.m.rows() == 1 && w.rows() == 1 && w.cols() == tm.m.cols(), "v and w must be rows of equal length");
        equal(product(r, tm.m, w.transpose()), r.identity(1), "v*w^T != 1");
    } else if (type == "um_congruence") {
        const auto& pi = hom(claim.at("hom"));
        const auto& u = matrix_in(claim.at("u"), pi.source(), "u");
        const auto& v = matrix_in(claim.at("v"), pi.target(), "v");
        equal(pi.target().normal_form(pi.apply(u)), v, "pi(u) != v");
    } else {
        fail("unknown claim type '" + type + "'");
    }
    ++report_.claims_checked;
}

void Verifier::walk(const json& node, const std::string& path)
{
    NodeResult result{path, "", "", true};
    std::string where = path;
    try {
        require(node.is_object(), "node is not an object");
        result.kind = node.value("kind", "");
        result.label = node.value("label", "");
        static const std::set<std::string> kinds = {"base", "decompose", "glue", "lift", "obligation"};
        require(kinds.contains(result.kind), "unknown node kind '" + result.kind + "'");
        where = path + " (" + result.label + ")";
    } catch (const ClaimFailure& f) {
        record(where, "node", f);
        result.ok = false;
        report_.nodes.push_back(result);
        return;
    }
    if (node.contains("claims")) {
        for (const auto& claim : node["claims"]) {
            auto type = claim.is_object() ? claim.value("type", "?") : "?";
            try {
                try {
                    check_claim(claim);
                } catch (const ClaimFailure&) {
                    throw;
                } catch (const std::exception& e) {
                    fail(e.what());
                }
            } catch (const ClaimFailure& f) {
                record(where, type, f);
                result.ok = false;
            }
        }
    }
    report_.nodes.push_back(result);
    if (node.contains("children")) {
        std::size_t i = 0;
        for (const auto& child : node["children"])
            walk(child, path + "/" + std::to_string(i++));
    }
}

VerifierReport Verifier::run()
{
    try {
        try {
            require(doc_.is_object(), "certificate is not a JSON object");
            require(doc_.value("format", "") == "srpb/1", "unsupported certificate format");
            load_rings();
            load_homs();
            load_matrices();
            load_squares();
        } catch (const ClaimFailure&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
    } catch (const ClaimFailure& f) {
        record("tables", "structure", f);
        return report_;
    }

    if (doc_.contains("root") && !doc_["root"].is_null())
        walk(doc_["root"], "root");

    try {
        try {
            auto obligations = doc_.value("obligations", json::array());
            for (const auto& ob : obligations) {
                const auto& r = ring(ob.at("ring"));
                const auto& e = matrix_in(ob.at("module"), r, "obligation module");
                equal(product(r, e, e), e, "obligation module is not idempotent");
            }
            auto status = doc_.value("status", "complete");
            if (status == "complete")
                require(obligations.empty(), "complete certificate lists obligations");
            else if (!obligations.empty())
                report_.warnings.push_back("partial certificate: " + std::to_string(obligations.size()) +
                                           " open obligation(s)");
            if (doc_.contains("failure"))
                report_.warnings.push_back("construction reported: " + doc_["failure"].get<std::string>());
            for (std::size_t i = 0; i < matrices_.size(); ++i)
                if (!pinned_.contains(i))
                    fail("matrix " + std::to_string(i) + " is not referenced by any claim");
        } catch (const ClaimFailure&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
    } catch (const ClaimFailure& f) {
        record("document", "obligations", f);
    }

    if (report_.ok && report_.claims_checked == 0)
        report_.warnings.push_back("certificate has no claims; passing vacuously");
    return report_;
}

} // namespace

std::string VerifierReport::summary() const
{
    std::ostringstream out;
    for (const auto& w : warnings)
        out << "warning: " << w << "\n";
    if (ok) {
        out << "OK: " << claims_checked << " claim(s) in " << nodes.size() << " node(s) verified\n";
        return out.str();
    }
    out << "FAILED at " << failure->node << " [" << failure->claim << "]: " << failure->message << "\n";
    if (!failure->lhs.empty() || !failure->rhs.empty())
        out << "  lhs: " << failure->lhs << "\n  rhs: " << failure->rhs << "\n";
    return out.str();
}

VerifierReport verify_certificate(const json& doc)
{
    return Verifier(doc).run();
}

} // namespace srpb
