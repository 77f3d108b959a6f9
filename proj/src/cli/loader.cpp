#include "parser.hpp"

#include <spbw/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace spbw::cli
{

namespace
{

using nlohmann::json;

[[noreturn]] void schema(const std::string &origin, const std::string &where, const std::string &what)
{
    throw Error(ErrorCode::SchemaError, origin + ": " + where + ": " + what);
}

std::vector<std::string> string_list(const json &doc, const char *key, const std::string &origin)
{
    std::vector<std::string> out;
    if (!doc.contains(key))
        return out;
    const json &v = doc.at(key);
    if (!v.is_array())
        schema(origin, key, "expected an array of names");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string())
            schema(origin, std::string(key) + "[" + std::to_string(i) + "]", "expected a string");
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

bool valid_name(const std::string &n)
{
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
        return false;
    for (char c : n)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

std::size_t index_of(const std::vector<std::string> &names, const std::string &n)
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n)
            return i;
    return names.size();
}

std::string trim(std::string_view s)
{
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Left side of a relation: exactly two generator names joined by '*'.
std::pair<std::size_t, std::size_t> parse_left(const std::string &text, const std::vector<std::string> &gens,
                                               const std::string &origin, const std::string &where)
{
    std::size_t star = text.find('*');
    if (star == std::string::npos || text.find('*', star + 1) != std::string::npos)
        schema(origin, where, "left side must be a product of two generators, got '" + text + "'");
    std::string a = trim(std::string_view(text).substr(0, star));
    std::string b = trim(std::string_view(text).substr(star + 1));
    std::size_t j = index_of(gens, a);
    std::size_t i = index_of(gens, b);
    if (j == gens.size() || i == gens.size())
        schema(origin, where, "left side must be a product of two generators, got '" + text + "'");
    return {j, i};
}

Algebra build(const json &doc, const std::string &origin)
{
    if (!doc.is_object())
        schema(origin, "top level", "expected an object");
    for (const auto &[key, value] : doc.items()) {
        static const std::set<std::string> known{"name",  "parameters", "coeff_vars", "generators",
                                                 "order", "relations",  "sigma",      "strict"};
        if (!known.count(key))
            schema(origin, key, "unknown field");
    }

    Presentation p;
    p.parameters = string_list(doc, "parameters", origin);
    p.generators = string_list(doc, "generators", origin);
    if (p.generators.empty())
        schema(origin, "generators", "at least one generator is required");

    std::vector<std::string> ring_names;
    std::vector<bool> laurent;
    if (doc.contains("coeff_vars")) {
        const json &cv = doc.at("coeff_vars");
        if (!cv.is_array())
            schema(origin, "coeff_vars", "expected an array");
        for (std::size_t i = 0; i < cv.size(); ++i) {
            std::string where = "coeff_vars[" + std::to_string(i) + "]";
            if (!cv[i].is_object() || !cv[i].contains("name") || !cv[i].at("name").is_string())
                schema(origin, where, "expected {\"name\": ..., \"laurent\": ...}");
            ring_names.push_back(cv[i].at("name").get<std::string>());
            bool l = false;
            if (cv[i].contains("laurent")) {
                if (!cv[i].at("laurent").is_boolean())
                    schema(origin, where + ".laurent", "expected a boolean");
                l = cv[i].at("laurent").get<bool>();
            }
            laurent.push_back(l);
        }
    }
    p.ring = CoefficientRing(ring_names, laurent);

    std::set<std::string> names;
    for (const auto *group : {&p.parameters, &ring_names, &p.generators})
        for (const auto &n : *group) {
            if (!valid_name(n))
                schema(origin, "names", "'" + n + "' is not a valid identifier");
            if (!names.insert(n).second)
                schema(origin, "names", "'" + n + "' is declared twice");
        }

    std::size_t n = p.generators.size();
    p.order = MonomialOrder::standard(OrderKind::DegLex, n);
    if (doc.contains("order")) {
        const json &o = doc.at("order");
        if (!o.is_object())
            schema(origin, "order", "expected {\"kind\": ..., \"precedence\": [...]}");
        OrderKind kind = OrderKind::DegLex;
        if (o.contains("kind")) {
            if (!o.at("kind").is_string())
                schema(origin, "order.kind", "expected a string");
            try {
                kind = order_kind_from_string(o.at("kind").get<std::string>());
            } catch (const Error &e) {
                schema(origin, "order.kind", e.what());
            }
        }
        std::vector<std::size_t> prec;
        if (o.contains("precedence")) {
            for (const auto &g : string_list(o, "precedence", origin)) {
                std::size_t idx = index_of(p.generators, g);
                if (idx == n)
                    schema(origin, "order.precedence", "unknown generator '" + g + "'");
                prec.push_back(idx);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i)
                prec.push_back(i);
        }
        try {
            p.order = MonomialOrder(kind, prec);
        } catch (const Error &e) {
            schema(origin, "order.precedence", e.what());
        }
    }

    if (doc.contains("strict")) {
        if (!doc.at("strict").is_boolean())
            schema(origin, "strict", "expected a boolean");
        p.strict = doc.at("strict").get<bool>();
    }

    // Relations and sigma factors are read in a scaffold with the same names
    // and no relations; right-hand sides must already be standard there.
    Presentation bare = p;
    bare.order = MonomialOrder::standard(OrderKind::DegLex, n);
    bare.strict = false;
    Algebra scaffold = Algebra::validate(bare);

    std::vector<std::vector<Scalar>> factors(n, std::vector<Scalar>(ring_names.size(), Scalar(1)));
    if (doc.contains("sigma")) {
        const json &s = doc.at("sigma");
        if (!s.is_object())
            schema(origin, "sigma", "expected an object keyed by generator");
        for (const auto &[gen, row] : s.items()) {
            std::size_t gi = index_of(p.generators, gen);
            if (gi == n)
                schema(origin, "sigma", "unknown generator '" + gen + "'");
            if (!row.is_object())
                schema(origin, "sigma." + gen, "expected an object keyed by coefficient variable");
            for (const auto &[var, expr] : row.items()) {
                std::string where = "sigma." + gen + "." + var;
                std::size_t vi = index_of(ring_names, var);
                if (vi == ring_names.size())
                    schema(origin, where, "unknown coefficient variable");
                if (!expr.is_string())
                    schema(origin, where, "expected a scalar expression string");
                Scalar c;
                try {
                    c = parse_scalar(scaffold, expr.get<std::string>());
                } catch (const Error &e) {
                    schema(origin, where, e.what());
                }
                if (c.is_zero())
                    schema(origin, where, "sigma factor must be nonzero");
                factors[gi][vi] = c;
            }
        }
    }
    p.sigma = SigmaAction(factors);

    if (doc.contains("relations")) {
        const json &rels = doc.at("relations");
        if (!rels.is_array())
            schema(origin, "relations", "expected an array");
        for (std::size_t k = 0; k < rels.size(); ++k) {
            std::string where = "relations[" + std::to_string(k) + "]";
            const json &r = rels[k];
            if (!r.is_object() || !r.contains("left") || !r.contains("right") || !r.at("left").is_string() ||
                !r.at("right").is_string())
                schema(origin, where, "expected {\"left\": \"xj*xi\", \"right\": expression}");
            auto [j, i] = parse_left(r.at("left").get<std::string>(), p.generators, origin, where + ".left");
            StdPoly rhs;
            try {
                rhs = parse_expression(scaffold, r.at("right").get<std::string>(), true);
            } catch (const Error &e) {
                schema(origin, where + ".right", e.what());
            }
            ExpVec swapped = ExpVec::unit(n, i) + ExpVec::unit(n, j);
            RingElem dcoef = rhs.coefficient(swapped);
            auto d = dcoef.as_scalar();
            if (!d)
                schema(origin, where + ".right", "coefficient of the swapped word must be a scalar");
            RelationSpec spec;
            spec.j = j;
            spec.i = i;
            spec.d = *d;
            spec.lower = rhs - StdPoly::monomial(swapped, dcoef);
            p.relations.push_back(std::move(spec));
        }
    }
    return Algebra::validate(std::move(p));
}

} // namespace

Algebra load_algebra_text(std::string_view json_text, const std::string &origin)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::SchemaError, origin + ": " + e.what());
    }
    return build(doc, origin);
}

Algebra load_algebra(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return load_algebra_text(buf.str(), path.string());
}

MonomialOrder parse_order(const Algebra &a, std::string_view text)
{
    std::size_t colon = text.find(':');
    OrderKind kind = order_kind_from_string(trim(text.substr(0, colon)));
    if (colon == std::string_view::npos)
        return MonomialOrder(kind, a.order().precedence());
    std::vector<std::size_t> prec;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string name = trim(rest.substr(0, comma));
        std::size_t idx = index_of(a.presentation().generators, name);
        if (idx == a.generators())
            throw Error(ErrorCode::UnknownName, "unknown generator '" + name + "' in order");
        prec.push_back(idx);
        rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
    return MonomialOrder(kind, prec);
}

} // namespace spbw::cli
