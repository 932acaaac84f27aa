#include "srpb/engines/certificate.hpp"

namespace srpb {

namespace {

json entry_strings(const PolyMatrix& m)
{
    json out = json::array();
    for (const auto& e : m.entries())
        out.push_back(e.to_string());
    return out;
}

} // namespace

std::string CertBuilder::ring(const QuotientRing& r)
{
    for (std::size_t i = 0; i < rings_.size(); ++i)
        if (rings_[i] == r)
            return "R" + std::to_string(i);
    auto name = "R" + std::to_string(rings_.size());
    rings_.push_back(r);
    json ideal = json::array();
    for (const auto& g : r.generator_polynomials())
        ideal.push_back(g.to_string());
    ring_table_[name] = {{"field", r.field().name()}, {"vars", r.nvars()}, {"ideal", ideal}};
    return name;
}

std::string CertBuilder::hom(const RingHom& h)
{
    for (std::size_t i = 0; i < homs_.size(); ++i)
        if (homs_[i] == h)
            return "h" + std::to_string(i);
    auto name = "h" + std::to_string(homs_.size());
    homs_.push_back(h);
    json images = json::array();
    for (const auto& f : h.images())
        images.push_back(f.to_string());
    hom_table_[name] = {{"source", ring(h.source())}, {"target", ring(h.target())}, {"images", images}};
    return name;
}

std::string CertBuilder::square(const FiberSquare& s)
{
    json entry = {{"A", ring(s.A)},       {"A1", ring(s.A1)},    {"A2", ring(s.A2)},
                  {"A0", ring(s.A0)},     {"i1", hom(s.i1)},     {"i2", hom(s.i2)},
                  {"j1", hom(s.j1)},      {"j2", hom(s.j2)},     {"section", hom(s.section)},
                  {"apex", s.apex}};
    auto key = entry.dump();
    for (std::size_t i = 0; i < square_keys_.size(); ++i)
        if (square_keys_[i] == key)
            return "S" + std::to_string(i);
    auto name = "S" + std::to_string(square_keys_.size());
    square_keys_.push_back(key);
    square_table_[name] = entry;
    return name;
}

std::size_t CertBuilder::matrix(const QuotientRing& r, const PolyMatrix& m)
{
    auto nm = r.normal_form(m);
    auto rname = ring(r);
    json entry = {{"ring", rname}, {"rows", nm.rows()}, {"cols", nm.cols()}, {"entries", entry_strings(nm)}};
    auto key = entry.dump();
    if (auto it = matrix_keys_.find(key); it != matrix_keys_.end())
        return it->second;
    auto id = matrix_table_.size();
    matrix_keys_.emplace(key, id);
    matrix_table_.push_back(entry);
    return id;
}

json CertBuilder::idempotent(const ProjModule& p)
{
    return {{"type", "idempotent"}, {"m", matrix(p.ring(), p.idempotent())}};
}

json CertBuilder::image(const RingHom& h, const PolyMatrix& from, const PolyMatrix& to)
{
    return {{"type", "image"},
            {"hom", hom(h)},
            {"from", matrix(h.source(), from)},
            {"to", matrix(h.target(), to)}};
}

json CertBuilder::iso(const ModIso& iso)
{
    const auto& r = iso.source.ring();
    return {{"type", "iso"},
            {"source", matrix(r, iso.source.idempotent())},
            {"target", matrix(r, iso.target.idempotent())},
            {"forward", matrix(r, iso.forward)},
            {"backward", matrix(r, iso.backward)}};
}

json CertBuilder::inverse(const QuotientRing& r, const PolyMatrix& m, const PolyMatrix& inv)
{
    return {{"type", "inverse"}, {"m", matrix(r, m)}, {"inverse", matrix(r, inv)}};
}

json CertBuilder::linear(const QuotientRing& r, const std::vector<LinearTerm>& terms, const PolyMatrix& result)
{
    json jt = json::array();
    for (const auto& t : terms) {
        json factors = json::array();
        for (const auto& f : t.factors) {
            json jf = {{"m", matrix(*f.ring, f.matrix)}};
            if (f.hom)
                jf["hom"] = hom(*f.hom);
            if (f.transpose)
                jf["transpose"] = true;
            factors.push_back(jf);
        }
        jt.push_back({{"sign", t.sign}, {"factors", factors}});
    }
    return {{"type", "linear"}, {"ring", ring(r)}, {"terms", jt}, {"result", matrix(r, result)}};
}

json CertBuilder::square_claim(const FiberSquare& s)
{
    return {{"type", "square"}, {"square", square(s)}};
}

json CertBuilder::hom_claim(const RingHom& h)
{
    return {{"type", "hom"}, {"hom", hom(h)}};
}

json CertBuilder::whitehead(const FiberSquare& s, const Invertible& sigma, const Invertible& u)
{
    return {{"type", "whitehead"},
            {"square", square(s)},
            {"sigma", matrix(s.A0, sigma.matrix)},
            {"sigma_inverse", matrix(s.A0, sigma.inverse)},
            {"u", matrix(s.A2, u.matrix)},
            {"u_inverse", matrix(s.A2, u.inverse)}};
}

json CertBuilder::gl_lift(const RingHom& pi, const Invertible& sigma, const Invertible& delta)
{
    return {{"type", "gl_lift"},
            {"hom", hom(pi)},
            {"sigma", matrix(pi.target(), sigma.matrix)},
            {"sigma_inverse", matrix(pi.target(), sigma.inverse)},
            {"delta", matrix(pi.source(), delta.matrix)},
            {"delta_inverse", matrix(pi.source(), delta.inverse)}};
}

json CertBuilder::unimodular(const QuotientRing& r, const PolyMatrix& v, const PolyMatrix& w)
{
    return {{"type", "unimodular"}, {"v", matrix(r, v)}, {"w", matrix(r, w)}};
}

json CertBuilder::congruence(const RingHom& pi, const PolyMatrix& u, const PolyMatrix& v)
{
    return {{"type", "um_congruence"},
            {"hom", hom(pi)},
            {"u", matrix(pi.source(), u)},
            {"v", matrix(pi.target(), v)}};
}

std::vector<json> CertBuilder::glue_claims(const FiberSquare& s, const PolyMatrix& m1, const PolyMatrix& m2,
                                           const PolyMatrix& m)
{
    std::vector<json> out;
    out.push_back(linear(s.A,
                         {{1, {LinearFactor::of(s.A1, m1)}},
                          {1, {LinearFactor::of(s.A2, m2)}},
                          {-1, {LinearFactor::through(s.j1, m1)}}},
                         m));
    out.push_back(image(s.i1, m, m1));
    out.push_back(image(s.i2, m, m2));
    return out;
}

json CertBuilder::node(const std::string& kind, const std::string& label)
{
    return {{"kind", kind}, {"label", label}, {"claims", json::array()}, {"children", json::array()}};
}

json CertBuilder::document(const std::string& kind, const json& root, const json& obligations,
                           const json& profile) const
{
    json doc = {{"format", certificate_format},
                {"kind", kind},
                {"status", obligations.empty() ? "complete" : "partial"},
                {"rings", ring_table_},
                {"homs", hom_table_},
                {"squares", square_table_},
                {"matrices", matrix_table_},
                {"root", root},
                {"obligations", obligations}};
    if (!profile.is_null())
        doc["profile"] = profile;
    return doc;
}

std::string dump_certificate(const json& doc)
{
    return doc.dump(2) + "\n";
}

} // namespace srpb
