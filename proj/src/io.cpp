#include "bredon/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bredon {

using nlohmann::json;

std::string to_string(InputMode m)
{
    switch (m) {
    case InputMode::Coxeter:
        return "coxeter";
    case InputMode::GraphProduct:
        return "graph_product";
    case InputMode::PosetOmega:
        return "poset_omega";
    case InputMode::FiniteDevelopment:
        return "finite_development";
    }
    return "unknown";
}

namespace {

[[noreturn]] void schema(const std::string& msg)
{
    throw InputError("SchemaError", msg);
}

const json& field(const json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema(where + ": missing field \"" + key + "\"");
    return *it;
}

void only_keys(const json& obj, std::set<std::string> allowed, const std::string& where)
{
    for (const auto& [k, _] : obj.items())
        if (!allowed.count(k))
            schema(where + ": unexpected field \"" + k + "\"");
}

std::string as_string(const json& v, const std::string& where)
{
    if (!v.is_string())
        schema(where + ": expected a string");
    return v.get<std::string>();
}

std::uint64_t as_uint(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0))
        schema(where + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<std::string> string_list(const json& v, const std::string& where)
{
    if (!v.is_array())
        schema(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& v, const std::string& where)
{
    if (!v.is_array())
        schema(where + ": expected an array of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto p = string_list(v[i], where + "[" + std::to_string(i) + "]");
        if (p.size() != 2)
            schema(where + "[" + std::to_string(i) + "]: expected exactly two entries");
        out.emplace_back(p[0], p[1]);
    }
    return out;
}

std::vector<std::uint32_t> perm_images(const json& v, const std::string& where)
{
    if (!v.is_array())
        schema(where + ": expected an image array");
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(static_cast<std::uint32_t>(as_uint(v[i], where + "[" + std::to_string(i) + "]")));
    return out;
}

std::vector<std::vector<std::uint32_t>> perm_list(const json& v, const std::string& where)
{
    if (!v.is_array())
        schema(where + ": expected an array of permutations");
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(perm_images(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

PosetSpec parse_poset(const json& v)
{
    if (!v.is_object())
        schema("poset: expected an object");
    only_keys(v, {"elements", "relations"}, "poset");
    PosetSpec p;
    p.elements = string_list(field(v, "elements", "poset"), "poset.elements");
    if (v.contains("relations"))
        p.relations = pair_list(v["relations"], "poset.relations");
    return p;
}

json poset_json(const PosetSpec& p)
{
    json rel = json::array();
    for (const auto& [a, b] : p.relations)
        rel.push_back({a, b});
    return {{"elements", p.elements}, {"relations", rel}};
}

}  // namespace

InputDocument parse_input(const json& j)
{
    if (!j.is_object())
        schema("input document must be a JSON object");
    const auto mode = as_string(field(j, "mode", "document"), "mode");
    InputDocument doc;
    if (mode == "coxeter") {
        doc.mode = InputMode::Coxeter;
        only_keys(j, {"mode", "generators", "matrix"}, "coxeter");
        doc.generators = string_list(field(j, "generators", "coxeter"), "generators");
        const auto& m = field(j, "matrix", "coxeter");
        if (!m.is_array())
            schema("matrix: expected an array of rows");
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (!m[r].is_array())
                schema("matrix[" + std::to_string(r) + "]: expected an array");
            std::vector<unsigned> row;
            for (std::size_t c = 0; c < m[r].size(); ++c)
                row.push_back(static_cast<unsigned>(
                    as_uint(m[r][c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]")));
            doc.matrix.push_back(std::move(row));
        }
    } else if (mode == "graph_product") {
        doc.mode = InputMode::GraphProduct;
        only_keys(j, {"mode", "vertices", "edges"}, "graph_product");
        const auto& vs = field(j, "vertices", "graph_product");
        if (!vs.is_array())
            schema("vertices: expected an array");
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto where = "vertices[" + std::to_string(i) + "]";
            if (!vs[i].is_object())
                schema(where + ": expected an object");
            only_keys(vs[i], {"name", "order"}, where);
            GraphVertex v;
            v.name = as_string(field(vs[i], "name", where), where + ".name");
            v.order = static_cast<unsigned>(as_uint(field(vs[i], "order", where), where + ".order"));
            doc.vertices.push_back(std::move(v));
        }
        if (j.contains("edges"))
            doc.edges = pair_list(j["edges"], "edges");
    } else if (mode == "poset_omega") {
        doc.mode = InputMode::PosetOmega;
        only_keys(j, {"mode", "poset", "omega_classes"}, "poset_omega");
        doc.poset = parse_poset(field(j, "poset", "poset_omega"));
        if (j.contains("omega_classes")) {
            const auto& oc = j["omega_classes"];
            if (!oc.is_array())
                schema("omega_classes: expected an array of arrays");
            std::vector<std::vector<std::string>> classes;
            for (std::size_t i = 0; i < oc.size(); ++i)
                classes.push_back(string_list(oc[i], "omega_classes[" + std::to_string(i) + "]"));
            doc.omega_classes = std::move(classes);
        }
    } else if (mode == "finite_development") {
        doc.mode = InputMode::FiniteDevelopment;
        only_keys(j, {"mode", "degree", "group", "poset", "locals"}, "finite_development");
        doc.degree = as_uint(field(j, "degree", "finite_development"), "degree");
        doc.group = perm_list(field(j, "group", "finite_development"), "group");
        doc.poset = parse_poset(field(j, "poset", "finite_development"));
        const auto& loc = field(j, "locals", "finite_development");
        if (!loc.is_object())
            schema("locals: expected an object mapping poset elements to generator lists");
        for (const auto& [k, v] : loc.items())
            doc.locals[k] = perm_list(v, "locals." + k);
    } else {
        schema("unknown mode \"" + mode + "\"");
    }
    return doc;
}

InputDocument parse_input_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("ParseError", e.what());
    }
    return parse_input(j);
}

InputDocument load_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("IOError", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input_text(ss.str());
}

json to_json(const InputDocument& doc)
{
    json j;
    j["mode"] = to_string(doc.mode);
    switch (doc.mode) {
    case InputMode::Coxeter:
        j["generators"] = doc.generators;
        j["matrix"] = doc.matrix;
        break;
    case InputMode::GraphProduct: {
        json vs = json::array();
        for (const auto& v : doc.vertices)
            vs.push_back({{"name", v.name}, {"order", v.order}});
        json es = json::array();
        for (const auto& [a, b] : doc.edges)
            es.push_back({a, b});
        j["vertices"] = vs;
        j["edges"] = es;
        break;
    }
    case InputMode::PosetOmega:
        j["poset"] = poset_json(doc.poset);
        if (doc.omega_classes)
            j["omega_classes"] = *doc.omega_classes;
        break;
    case InputMode::FiniteDevelopment: {
        j["degree"] = doc.degree;
        j["group"] = doc.group;
        j["poset"] = poset_json(doc.poset);
        json loc = json::object();
        for (const auto& [k, v] : doc.locals)
            loc[k] = v;
        j["locals"] = loc;
        break;
    }
    }
    return j;
}

std::string canonical_dump(const InputDocument& doc)
{
    // nlohmann::json objects keep keys sorted.
    return to_json(doc).dump(2) + "\n";
}

namespace {

template <class F>
auto translate_errors(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const ValidationError& e) {
        throw InputError(to_string(e.issue().kind), e.what());
    } catch (const CycleError& e) {
        throw InputError("CycleError", e.what());
    } catch (const UnknownElement& e) {
        throw InputError("UnknownElement", e.what());
    } catch (const InvalidCoxeterMatrix& e) {
        throw InputError("InvalidCoxeterMatrix", e.what());
    } catch (const UnknownGenerator& e) {
        throw InputError("UnknownGenerator", e.what());
    } catch (const InvalidOrder& e) {
        throw InputError("InvalidOrder", e.what());
    } catch (const InvalidGraph& e) {
        throw InputError("InvalidGraph", e.what());
    } catch (const InvalidPermutation& e) {
        throw InputError("InvalidPermutation", e.what());
    } catch (const DegreeMismatch& e) {
        throw InputError("DegreeMismatch", e.what());
    } catch (const EmptyClass& e) {
        throw InputError("EmptyClass", e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError("InvalidInput", e.what());
    }
}

}  // namespace

CoxeterMatrix to_coxeter(const InputDocument& doc)
{
    return translate_errors([&] {
        if (doc.mode == InputMode::Coxeter)
            return CoxeterMatrix(doc.generators, doc.matrix);
        if (doc.mode == InputMode::GraphProduct)
            return graph_product_to_coxeter(doc.vertices, doc.edges);
        throw InputError("WrongMode", "mode " + to_string(doc.mode) + " does not describe a Coxeter system");
    });
}

FinitePoset to_poset(const InputDocument& doc)
{
    return translate_errors([&] {
        if (doc.mode != InputMode::PosetOmega && doc.mode != InputMode::FiniteDevelopment)
            throw InputError("WrongMode", "mode " + to_string(doc.mode) + " has no poset");
        if (doc.poset.elements.empty())
            throw InputError("SchemaError", "poset must have at least one element");
        return FinitePoset::build(doc.poset.elements, doc.poset.relations);
    });
}

SimpleComplexOfGroups to_complex(const InputDocument& doc)
{
    auto q = to_poset(doc);
    return translate_errors([&] {
        if (doc.mode == InputMode::PosetOmega) {
            std::vector<std::vector<std::string>> classes;
            if (doc.omega_classes)
                classes = *doc.omega_classes;
            else
                for (const auto& e : q.elements())
                    classes.push_back({e});
            auto s = SimpleComplexOfGroups::abstract(std::move(q), std::move(classes));
            require_valid(s);
            return s;
        }
        std::vector<Permutation> gens;
        for (const auto& g : doc.group) {
            if (g.size() != doc.degree)
                throw InputError("DegreeMismatch", "group generator has " + std::to_string(g.size()) +
                                                       " images, degree is " + std::to_string(doc.degree));
            gens.emplace_back(g);
        }
        PermGroup group(doc.degree, std::move(gens));
        std::map<std::string, PermGroup> locals;
        for (const auto& [k, v] : doc.locals) {
            std::vector<Permutation> ps;
            for (const auto& g : v) {
                if (g.size() != doc.degree)
                    throw InputError("DegreeMismatch", "generator of local group '" + k + "' has " +
                                                           std::to_string(g.size()) + " images, degree is " +
                                                           std::to_string(doc.degree));
                ps.emplace_back(g);
            }
            locals.emplace(k, PermGroup(doc.degree, std::move(ps)));
        }
        auto s = SimpleComplexOfGroups::finite(std::move(q), std::move(group), locals);
        require_valid(s);
        return s;
    });
}

}  // namespace bredon
