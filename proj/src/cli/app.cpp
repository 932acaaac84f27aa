#include "srpb/cli/app.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "srpb/cli/formats.hpp"
#include "srpb/cli/verify.hpp"
#include "srpb/engines/engines.hpp"
#include "srpb/groebner.hpp"
#include "srpb/polycore/parse.hpp"
#include "srpb/quotient/square.hpp"

namespace srpb {

using nlohmann::json;

namespace {

json faces_json(const std::vector<VertexSet>& faces)
{
    json out = json::array();
    for (auto f : faces)
        out.push_back(vertices_of(f));
    return out;
}

json tagged(json body)
{
    body["format"] = "srpb/1";
    return body;
}

class Session {
public:
    Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    void emit(const json& doc)
    {
        auto text = doc.dump(2) + "\n";
        if (out_path_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(out_path_);
        if (!file)
            throw InputError("cannot write " + out_path_);
        file << text;
    }

    /// Writes a certificate after re-checking it; 1 if the check fails.
    int emit_certificate(const json& doc, int success_code)
    {
        emit(doc);
        auto report = verify_certificate(doc);
        if (!report.ok) {
            err_ << report.summary();
            return exit_verification;
        }
        if (doc.value("status", "complete") != "complete") {
            err_ << "incomplete: " << doc.value("obligations", json::array()).size() << " obligation(s)";
            if (doc.contains("failure"))
                err_ << "; " << doc["failure"].get<std::string>();
            err_ << "\n";
            return exit_exhausted;
        }
        return success_code;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::string out_path_;
    InputLoader load;
};

int dispatch(const std::vector<std::string>& args, Session& s)
{
    CLI::App app{"Stanley-Reisner projective module toolkit", "srpb"};
    app.require_subcommand(1);
    app.add_option("-o,--out", s.out_path_, "Write the result to this file instead of stdout");
    app.fallthrough();
    std::function<int()> action;

    std::string complex_path;
    std::size_t vertex = 0;

    // complex ...
    auto* complex = app.add_subcommand("complex", "Simplicial complex operations");
    complex->require_subcommand(1);
    auto add_complex_cmd = [&](const std::string& name, const std::string& help, bool with_vertex,
                               std::function<json(const SimplicialComplex&)> body) {
        auto* cmd = complex->add_subcommand(name, help);
        cmd->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
        if (with_vertex)
            cmd->add_option("--vertex", vertex, "Vertex index")->required();
        cmd->callback([&, body] {
            action = [&, body] {
                s.emit(body(s.load.complex_file(complex_path)));
                return int(exit_ok);
            };
        });
    };
    add_complex_cmd("faces", "List every face", false, [](const SimplicialComplex& c) {
        return tagged({{"faces", faces_json(c.faces())}});
    });
    add_complex_cmd("nonfaces", "Minimal non-faces and the Stanley-Reisner ideal", false,
                    [](const SimplicialComplex& c) {
                        auto ctx = make_context(Field::rationals(), c.ambient());
                        auto ring = ring_json(QuotientRing::stanley_reisner(ctx, c));
                        return tagged({{"nonfaces", faces_json(minimal_nonfaces(c))}, {"ideal", ring["ideal"]}});
                    });
    add_complex_cmd("link", "Link at a vertex", true,
                    [&](const SimplicialComplex& c) { return complex_json(link(c, vertex)); });
    add_complex_cmd("delete", "Deletion of a vertex", true,
                    [&](const SimplicialComplex& c) { return complex_json(deletion(c, vertex)); });
    add_complex_cmd("cone", "Cone with an unused apex", true,
                    [&](const SimplicialComplex& c) { return complex_json(cone(c, vertex)); });
    add_complex_cmd("decompose", "Split at the first apex with a proper star", false,
                    [](const SimplicialComplex& c) {
                        auto d = vorst_decompose(c);
                        auto s1 = complex_json(d.sigma1);
                        auto s2 = complex_json(d.sigma2);
                        s1.erase("format");
                        s2.erase("format");
                        return tagged({{"apex", d.apex}, {"deletion", s1}, {"link", s2}});
                    });

    // ring nf
    std::string ring_path;
    std::string expr;
    auto* ring = app.add_subcommand("ring", "Quotient ring arithmetic");
    ring->require_subcommand(1);
    auto* nf = ring->add_subcommand("nf", "Normal form of an expression");
    nf->add_option("--ring", ring_path, "Ring file")->required()->check(CLI::ExistingFile);
    nf->add_option("--expr", expr, "Polynomial expression")->required();
    nf->callback([&] {
        action = [&] {
            auto r = s.load.ring_file(ring_path);
            s.out_ << r.normal_form(parse_expression(r.context(), expr)).to_string() << "\n";
            return int(exit_ok);
        };
    });

    // gb member
    std::string gens_path;
    auto* gb = app.add_subcommand("gb", "Groebner bases");
    gb->require_subcommand(1);
    auto* member_cmd = gb->add_subcommand("member", "Ideal membership with cofactors");
    member_cmd->add_option("--gens", gens_path, "Generator file")->required()->check(CLI::ExistingFile);
    member_cmd->add_option("--target", expr, "Polynomial to test")->required();
    member_cmd->callback([&] {
        action = [&] {
            auto g = s.load.gens_file(gens_path);
            auto f = parse_expression(g.ctx, expr);
            auto cert = member(f, std::span<const Polynomial>(g.gens));
            json doc = tagged({{"target", f.to_string()}, {"member", cert.has_value()}});
            if (cert) {
                if (!certificate_holds(*cert, g.gens))
                    throw InternalError("membership certificate does not reproduce the target");
                json cof = json::array();
                for (const auto& c : cert->coefficients)
                    cof.push_back(c.to_string());
                doc["cofactors"] = cof;
            }
            s.emit(doc);
            return int(exit_ok);
        };
    });

    // square build|check
    std::size_t degree = 4;
    std::string field_name = "Q";
    auto* square = app.add_subcommand("square", "Cartesian squares of a complex");
    square->require_subcommand(1);
    auto* build = square->add_subcommand("build", "Build the square at the first proper apex");
    build->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
    build->add_option("--field", field_name, "Q or Fp:<p>");
    build->callback([&] {
        action = [&] {
            auto sq = build_vorst_square(Field::parse(field_name), s.load.complex_file(complex_path));
            CertBuilder cb;
            auto root = CertBuilder::node("decompose", "square at x" + std::to_string(sq.apex));
            root["claims"].push_back(cb.square_claim(sq));
            return s.emit_certificate(cb.document("square", root, json::array(), json()), exit_ok);
        };
    });
    auto* check = square->add_subcommand("check", "Check the fiber-product property up to a degree");
    check->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
    check->add_option("--degree", degree, "Maximum total degree")->capture_default_str();
    check->add_option("--field", field_name, "Q or Fp:<p>");
    check->callback([&] {
        action = [&] {
            auto sq = build_vorst_square(Field::parse(field_name), s.load.complex_file(complex_path));
            auto report = fiber_check(sq, degree);
            json doc = tagged({{"apex", sq.apex},
                               {"degree", report.degree},
                               {"ok", report.ok},
                               {"basis", {{"A", report.basis_a},
                                          {"A1", report.basis_a1},
                                          {"A2", report.basis_a2},
                                          {"A0", report.basis_a0}}}});
            if (report.failure)
                doc["failure"] = *report.failure;
            s.emit(doc);
            return int(report.ok ? exit_ok : exit_verification);
        };
    });

    // patch
    std::string sigma_path;
    auto* patch = app.add_subcommand("patch", "Projective module patched from an invertible matrix");
    patch->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
    patch->add_option("--sigma", sigma_path, "Invertible matrix over the link ring")->required()->check(CLI::ExistingFile);
    patch->callback([&] {
        action = [&] {
            auto sigma = s.load.matrix_file(sigma_path);
            auto complex = s.load.complex_file(complex_path);
            if (complex.ambient() != sigma.ring.nvars())
                throw InputError("sigma and the complex have different numbers of variables");
            auto sq = build_vorst_square(sigma.ring.context(), complex);
            if (!(sigma.ring == sq.A0))
                throw InputError("sigma must be given over the link ring " + sq.A0.describe());
            auto inv = det_unit_inverse(sigma.m, sq.A0);
            if (!inv.ok())
                throw PreconditionError("sigma is not invertible over " + sq.A0.describe());
            Invertible sig{sigma.m, *inv.inverse};
            auto patched = milnor_patch(sq, sig);
            return s.emit_certificate(patch_certificate(sq, sig, patched), exit_ok);
        };
    });

    // extend
    std::string idem_path;
    std::string oracle_name = "builtin";
    auto* extend = app.add_subcommand("extend", "Show a projective module is extended from the field");
    extend->add_option("--idempotent", idem_path, "Idempotent matrix file")->required()->check(CLI::ExistingFile);
    extend->add_option("--oracle", oracle_name, "Base-case oracle")
        ->check(CLI::IsMember({"builtin", "none"}))
        ->capture_default_str();
    extend->callback([&] {
        action = [&] {
            auto m = s.load.matrix_file(idem_path);
            ProjModule p(m.ring, m.m);
            ExtendOracle oracle;
            if (oracle_name == "none")
                oracle = [](const ProjModule& q) {
                    return q.idempotent().is_constant() ? builtin_oracle(q) : no_oracle(q);
                };
            auto result = oracle_name == "none" ? extend_witness(p, oracle) : extend_witness(p);
            return s.emit_certificate(result.certificate, exit_ok);
        };
    });

    // umrow lift
    std::string row_path;
    auto* umrow = app.add_subcommand("umrow", "Unimodular rows");
    umrow->require_subcommand(1);
    auto* umlift = umrow->add_subcommand("lift", "Lift a unimodular row along R -> R/J");
    umlift->add_option("--row", row_path, "1 x r row over R/J")->required()->check(CLI::ExistingFile);
    umlift->add_option("--ring", ring_path, "The ring R")->required()->check(CLI::ExistingFile);
    umlift->callback([&] {
        action = [&] {
            auto row = s.load.matrix_file(row_path);
            auto big = s.load.ring_file(ring_path);
            auto pi = hom_check(RingHom::natural(big, row.ring));
            auto v = make_um_row(row.ring, row.m);
            if (!v)
                throw PreconditionError("the row is not unimodular over " + row.ring.describe());
            auto result = umrow_lift(*v, pi);
            return s.emit_certificate(result.certificate, exit_ok);
        };
    });

    // gl lift
    std::vector<std::string> strategy_names;
    auto* gl = app.add_subcommand("gl", "Invertible matrices");
    gl->require_subcommand(1);
    auto* gllift = gl->add_subcommand("lift", "Lift an invertible matrix along R -> R/J");
    gllift->add_option("--sigma", sigma_path, "Invertible matrix over R/J")->required()->check(CLI::ExistingFile);
    gllift->add_option("--ring", ring_path, "The ring R")->required()->check(CLI::ExistingFile);
    gllift->add_option("--strategy", strategy_names, "Strategies to try, in order")
        ->check(CLI::IsMember({"entrywise", "elementary", "section", "descent"}));
    gllift->callback([&] {
        action = [&] {
            auto sigma = s.load.matrix_file(sigma_path);
            auto big = s.load.ring_file(ring_path);
            auto pi = hom_check(RingHom::natural(big, sigma.ring));
            auto inv = det_unit_inverse(sigma.m, sigma.ring);
            if (!inv.ok())
                throw PreconditionError("sigma is not invertible over " + sigma.ring.describe());
            Invertible sig{sigma.m, *inv.inverse};
            std::vector<LiftStrategy> strategies;
            for (const auto& n : strategy_names)
                strategies.push_back(*parse_strategy(n));
            if (strategies.empty())
                strategies.assign(default_strategies().begin(), default_strategies().end());
            auto result = lift_gl(sig, pi, strategies);
            return s.emit_certificate(gl_lift_certificate(pi, sig, result), exit_ok);
        };
    });

    // verify
    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "Re-check every identity of a certificate");
    verify->add_option("--cert", cert_path, "Certificate file")->required()->check(CLI::ExistingFile);
    verify->callback([&] {
        action = [&] {
            auto doc = s.load.read(cert_path);
            auto report = verify_certificate(doc);
            s.out_ << report.summary();
            return int(report.ok ? exit_ok : exit_verification);
        };
    });

    std::vector<const char*> argv{"srpb"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, s.out_, s.err_);
        return code == 0 ? exit_ok : exit_input;
    }
    return action();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Session session(out, err);
    try {
        return dispatch(args, session);
    } catch (const InternalError& e) {
        err << "internal check failed: " << e.what() << "\n";
        return exit_verification;
    } catch (const ParseError& e) {
        err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace srpb
