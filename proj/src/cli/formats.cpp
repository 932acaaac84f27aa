#include "srpb/cli/formats.hpp"

#include <fstream>
#include <sstream>

#include "srpb/errors.hpp"
#include "srpb/polycore/parse.hpp"

namespace srpb {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const json& field_of(const json& obj, const char* key, const std::string& what)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(what + ": missing \"" + key + "\"");
    return obj[key];
}

std::size_t count_of(const json& obj, const char* key, const std::string& what)
{
    const auto& v = field_of(obj, key, what);
    if (!v.is_number_unsigned())
        throw InputError(what + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string string_of(const json& v, const std::string& what)
{
    if (!v.is_string())
        throw InputError(what + ": expected a string");
    return v.get<std::string>();
}

json tagged(json body)
{
    body["format"] = "srpb/1";
    return body;
}

} // namespace

json InputLoader::read(const fs::path& path) const
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    json doc = json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded())
        throw InputError(path.string() + ": not valid structured text");
    if (doc.is_object() && doc.contains("format") && doc["format"] != "srpb/1")
        throw InputError(path.string() + ": unsupported format " + doc["format"].dump());
    return doc;
}

ContextPtr InputLoader::context(const Field& field, std::size_t vars)
{
    if (vars == 0 || vars > max_variables)
        throw InputError("variable count must be between 1 and " + std::to_string(max_variables));
    auto key = field.name() + "/" + std::to_string(vars);
    auto it = contexts_.find(key);
    if (it == contexts_.end())
        it = contexts_.emplace(key, make_context(field, vars)).first;
    return it->second;
}

QuotientRing InputLoader::ring(const json& obj, const fs::path& base)
{
    if (obj.is_string())
        return ring_file(base.empty() ? fs::path(obj.get<std::string>()) : base / obj.get<std::string>());
    const std::string what = "ring";
    auto ctx = context(Field::parse(string_of(field_of(obj, "field", what), what)), count_of(obj, "vars", what));
    std::vector<Monomial> gens;
    const auto& ideal = field_of(obj, "ideal", what);
    if (!ideal.is_array())
        throw InputError("ring: \"ideal\" must be a list");
    for (const auto& g : ideal) {
        auto f = parse_expression(ctx, string_of(g, what));
        if (f.terms().size() != 1)
            throw UnsupportedRingError("ideal generator '" + f.to_string() + "' is not a monomial");
        gens.push_back(f.lead().mono);
    }
    return QuotientRing(ctx, std::move(gens));
}

QuotientRing InputLoader::ring_file(const fs::path& path)
{
    return ring(read(path), path.parent_path());
}

SimplicialComplex InputLoader::complex(const json& obj)
{
    const std::string what = "complex";
    auto ambient = count_of(obj, "ambient", what);
    if (ambient == 0 || ambient > max_variables)
        throw InputError("complex: ambient must be between 1 and " + std::to_string(max_variables));
    const auto& facets = field_of(obj, "facets", what);
    if (!facets.is_array())
        throw InputError("complex: \"facets\" must be a list of lists");
    std::vector<std::vector<std::size_t>> list;
    for (const auto& f : facets) {
        if (!f.is_array())
            throw InputError("complex: each facet must be a list of vertices");
        std::vector<std::size_t> face;
        for (const auto& v : f) {
            if (!v.is_number_unsigned())
                throw InputError("complex: vertices are non-negative integers");
            face.push_back(v.get<std::size_t>());
        }
        if (!face.empty())
            list.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(ambient, list);
}

SimplicialComplex InputLoader::complex_file(const fs::path& path)
{
    return complex(read(path));
}

RingHom InputLoader::hom_file(const fs::path& path)
{
    auto obj = read(path);
    const std::string what = "hom " + path.string();
    auto source = ring(field_of(obj, "source", what), path.parent_path());
    auto target = ring(field_of(obj, "target", what), path.parent_path());
    const auto& images = field_of(obj, "images", what);
    if (!images.is_array() || images.size() != source.nvars())
        throw InputError(what + ": need one image per source variable");
    std::vector<Polynomial> list;
    for (const auto& e : images)
        list.push_back(parse_expression(target.context(), string_of(e, what)));
    return hom_check(RingHom(source, target, std::move(list)));
}

InputLoader::Matrix InputLoader::matrix_file(const fs::path& path)
{
    auto obj = read(path);
    const std::string what = "matrix " + path.string();
    auto r = ring(field_of(obj, "ring", what), path.parent_path());
    auto rows = count_of(obj, "rows", what);
    auto cols = count_of(obj, "cols", what);
    const auto& entries = field_of(obj, "entries", what);
    if (!entries.is_array() || entries.size() != rows * cols)
        throw InputError(what + ": expected " + std::to_string(rows * cols) + " entries");
    std::vector<Polynomial> list;
    for (const auto& e : entries)
        list.push_back(r.normal_form(parse_expression(r.context(), string_of(e, what))));
    return {r, PolyMatrix(r.context(), rows, cols, std::move(list))};
}

InputLoader::Generators InputLoader::gens_file(const fs::path& path)
{
    auto obj = read(path);
    const std::string what = "generators " + path.string();
    auto ctx = context(Field::parse(string_of(field_of(obj, "field", what), what)), count_of(obj, "vars", what));
    const auto& gens = field_of(obj, "gens", what);
    if (!gens.is_array())
        throw InputError(what + ": \"gens\" must be a list");
    std::vector<Polynomial> list;
    for (const auto& g : gens)
        list.push_back(parse_expression(ctx, string_of(g, what)));
    return {ctx, std::move(list)};
}

json ring_json(const QuotientRing& r)
{
    json ideal = json::array();
    for (const auto& g : r.generator_polynomials())
        ideal.push_back(g.to_string());
    return tagged({{"field", r.field().name()}, {"vars", r.nvars()}, {"ideal", ideal}});
}

json complex_json(const SimplicialComplex& c)
{
    json facets = json::array();
    for (auto f : c.facets())
        facets.push_back(vertices_of(f));
    if (facets.empty())
        facets.push_back(json::array());
    return tagged({{"ambient", c.ambient()}, {"facets", facets}});
}

json matrix_json(const QuotientRing& r, const PolyMatrix& m)
{
    json entries = json::array();
    for (const auto& e : r.normal_form(m).entries())
        entries.push_back(e.to_string());
    auto ring = ring_json(r);
    ring.erase("format");
    return tagged({{"ring", ring}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
}

} // namespace srpb
