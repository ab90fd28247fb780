#include "shuffles/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shuffles/errors.hpp"

namespace shuffles {

using nlohmann::json;

namespace {

IndexDomain domain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        raise(Errc::document_error, "domain needs a \"kind\" string");
    const std::string kind = j["kind"];
    auto field = [&](const char* name, Int fallback, bool required) {
        if (!j.contains(name)) {
            if (required)
                raise(Errc::document_error,
                      "domain kind \"" + kind + "\" needs \"" + name + "\"");
            return fallback;
        }
        if (!j[name].is_number_integer())
            raise(Errc::document_error,
                  "domain field \"" + std::string(name) + "\" must be an integer");
        return j[name].get<Int>();
    };
    if (kind == "finite_prefix") return IndexDomain::finite_prefix(field("m", 0, true));
    if (kind == "finite_range")
        return IndexDomain::finite_range(field("n", 0, true), field("m", 0, true));
    if (kind == "plus_inf") return IndexDomain::plus_inf(field("n", 0, false));
    if (kind == "minus_inf") return IndexDomain::minus_inf(field("m", 0, false));
    raise(Errc::document_error, "unknown domain kind \"" + kind + "\"");
}

UniformComponent component_from_json(const json& j, bool family) {
    UniformComponent c;
    c.is_family = family;
    if (j.contains("table")) {
        if (family)
            raise(Errc::document_error, "an omega-family cannot be table-backed");
        if (!j["table"].is_array())
            raise(Errc::document_error, "\"table\" must be an array of values");
        std::vector<Int> head;
        for (const json& v : j["table"]) {
            if (!v.is_number_integer())
                raise(Errc::document_error, "table values must be integers");
            head.push_back(v.get<Int>());
        }
        const std::string tail = j.value("tail", "none");
        if (tail != "identity" && tail != "none")
            raise(Errc::document_error, "\"tail\" must be \"identity\" or \"none\"");
        const std::string sign = j.value("sign", "+");
        if (sign != "+" && sign != "-")
            raise(Errc::document_error, "\"sign\" must be \"+\" or \"-\"");
        c.domains.push_back(sign == "+" ? IndexDomain::plus_inf()
                                        : IndexDomain::minus_inf());
        c.value = std::make_shared<TableMap>(std::move(head), tail == "identity",
                                             sign == "+" ? +1 : -1);
        return c;
    }
    if (!j.contains("domains") || !j["domains"].is_array() || j["domains"].empty())
        raise(Errc::document_error, "component needs a nonempty \"domains\" array");
    for (const json& d : j["domains"]) c.domains.push_back(domain_from_json(d));
    if (!j.contains("expr") || !j["expr"].is_string())
        raise(Errc::document_error, "component needs an \"expr\" string");
    std::vector<std::string> vars;
    for (size_t i = 0; i < c.domains.size(); ++i)
        vars.push_back("i" + std::to_string(i));
    if (family) vars.push_back("t");
    c.value = std::make_shared<ExprMap>(
        expr::parse(j["expr"].get<std::string>(), vars), vars);
    return c;
}

json domain_to_json(const IndexDomain& d) {
    json j;
    switch (d.kind) {
    case IndexDomain::Kind::finite_prefix:
        j["kind"] = "finite_prefix";
        j["m"] = d.m;
        break;
    case IndexDomain::Kind::finite_range:
        j["kind"] = "finite_range";
        j["n"] = d.n;
        j["m"] = d.m;
        break;
    case IndexDomain::Kind::plus_inf:
        j["kind"] = "plus_inf";
        if (d.n != 0) j["n"] = d.n;
        break;
    case IndexDomain::Kind::minus_inf:
        j["kind"] = "minus_inf";
        if (d.m != 0) j["m"] = d.m;
        break;
    }
    return j;
}

json component_to_json(const UniformComponent& c) {
    json j;
    switch (c.value->kind()) {
    case ValueMap::Kind::expression: {
        const auto& em = static_cast<const ExprMap&>(*c.value);
        j["domains"] = json::array();
        for (const IndexDomain& d : c.domains) j["domains"].push_back(domain_to_json(d));
        j["expr"] = expr::to_string(em.tree());
        return j;
    }
    case ValueMap::Kind::table: {
        const auto& tm = static_cast<const TableMap&>(*c.value);
        j["table"] = tm.head();
        j["tail"] = tm.identity_tail() ? "identity" : "none";
        j["sign"] = tm.sign() > 0 ? "+" : "-";
        return j;
    }
    default:
        raise(Errc::not_serializable,
              "only expression- and table-backed components serialize");
    }
}

} // namespace

MixedShuffle shuffle_from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded())
        raise(Errc::document_error, "malformed JSON in shuffle document");
    if (!doc.is_object())
        raise(Errc::document_error, "shuffle document must be a JSON object");
    MixedShuffle s;
    s.label = doc.value("label", "");
    if (!doc.contains("components") || !doc["components"].is_array())
        raise(Errc::document_error, "shuffle document needs a \"components\" array");
    for (const json& c : doc["components"])
        s.components.push_back(component_from_json(c, false));
    if (doc.contains("omega_family") && !doc["omega_family"].is_null())
        s.components.push_back(component_from_json(doc["omega_family"], true));
    validate(s);
    return s;
}

MixedShuffle shuffle_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::document_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return shuffle_from_json(buf.str());
}

std::string shuffle_to_json(const MixedShuffle& s, int indent) {
    json doc;
    doc["label"] = s.label;
    doc["components"] = json::array();
    for (size_t i = 0; i < s.fixed_count(); ++i)
        doc["components"].push_back(component_to_json(s.components[i]));
    if (s.has_family())
        doc["omega_family"] = component_to_json(s.components.back());
    return doc.dump(indent) + "\n";
}

} // namespace shuffles
