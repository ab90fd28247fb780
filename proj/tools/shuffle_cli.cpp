// Command-line front end over the shuffles library: one verb per run,
// deterministic byte-stable output, --json for machines.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shuffles/address.hpp"
#include "shuffles/algebra.hpp"
#include "shuffles/canonical.hpp"
#include "shuffles/errors.hpp"
#include "shuffles/fixtures.hpp"
#include "shuffles/json_io.hpp"
#include "shuffles/ordinal.hpp"

using namespace shuffles;
using nlohmann::json;

namespace {

struct Options {
    Int budget = 1'000'000;
    Int upto = 1000;
    bool as_json = false;
    bool dot = false;
};

int exit_code(Errc c) {
    switch (c) {
    case Errc::syntax_error:
    case Errc::undeclared_variable:
    case Errc::document_error:
        return 2;
    default:
        return 1;
    }
}

void emit(const Options& opt, const json& machine, const std::string& text) {
    if (opt.as_json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

json address_json(const Address& a) {
    json j;
    j["address"] = to_string(a);
    json tuple = json::array();
    tuple.push_back(a.t);
    for (Int i : a.indices) tuple.push_back(i);
    j["tuple"] = tuple;
    return j;
}

ordinal::Sign parse_sign(const std::string& s) {
    if (s == "+") return ordinal::Sign::plus;
    if (s == "-") return ordinal::Sign::minus;
    raise(Errc::document_error, "sign must be \"+\" or \"-\"");
}

json report_json(const VerificationReport& rep) {
    json j;
    j["checked_up_to"] = rep.checked_up_to;
    j["budget_used"] = rep.budget_used;
    j["exhausted"] = rep.exhausted;
    j["ok"] = rep.ok();
    j["missing"] = rep.missing;
    j["duplicates"] = json::array();
    for (const auto& d : rep.duplicates) {
        json e;
        e["value"] = d.value;
        e["first"] = to_string(d.first);
        e["second"] = to_string(d.second);
        j["duplicates"].push_back(e);
    }
    return j;
}

std::string report_text(const VerificationReport& rep) {
    std::string out;
    out += "checked_up_to: " + std::to_string(rep.checked_up_to) + "\n";
    out += "budget_used: " + std::to_string(rep.budget_used) +
           (rep.exhausted ? " (exhausted)" : "") + "\n";
    out += "duplicates: " + std::to_string(rep.duplicates.size()) + "\n";
    for (size_t i = 0; i < rep.duplicates.size() && i < 5; ++i) {
        const auto& d = rep.duplicates[i];
        out += "  value " + std::to_string(d.value) + " at " + to_string(d.first) +
               " and " + to_string(d.second) + "\n";
    }
    out += "missing: " + std::to_string(rep.missing.size());
    if (!rep.missing.empty()) {
        out += " (";
        for (size_t i = 0; i < rep.missing.size() && i < 10; ++i) {
            if (i) out += " ";
            out += std::to_string(rep.missing[i]);
        }
        if (rep.missing.size() > 10) out += " ...";
        out += ")";
    }
    out += "\n";
    if (!rep.missing.empty() && !rep.exhausted)
        out += "note: missing values may be a budget artifact; retry with a "
               "larger --budget\n";
    out += rep.ok() ? "result: OK\n" : "result: FAIL\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Finitely presented shuffles of the naturals"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--budget", opt.budget, "enumeration step budget")
        ->capture_default_str();
    app.add_option("--upto", opt.upto, "bound N for verification-style checks")
        ->capture_default_str();
    app.add_flag("--json", opt.as_json, "machine-readable output");

    std::string file, file2, sign = "+", out_dir;
    Int x = 0, y = 0;
    std::vector<Int> values;

    auto* verify_cmd = app.add_subcommand("verify", "coverage/injectivity report");
    verify_cmd->add_option("file", file)->required();

    auto* address_cmd = app.add_subcommand("address", "address of a natural");
    address_cmd->add_option("file", file)->required();
    address_cmd->add_option("x", x)->required();

    auto* value_cmd = app.add_subcommand("value", "value at an address (t i1 ...)");
    value_cmd->add_option("file", file)->required();
    value_cmd->add_option("indices", values, "t i1 ... ik")->required()->expected(-1);

    auto* compare_cmd = app.add_subcommand("compare", "order two naturals");
    compare_cmd->add_option("file", file)->required();
    compare_cmd->add_option("x", x)->required();
    compare_cmd->add_option("y", y)->required();

    auto* sort_cmd = app.add_subcommand("sort", "sort naturals by the induced order");
    sort_cmd->add_option("file", file)->required();
    sort_cmd->add_option("values", values)->required()->expected(-1);

    auto* ordertype_cmd = app.add_subcommand("ordertype", "order type of the presentation");
    ordertype_cmd->add_option("file", file)->required();

    auto* successor_cmd = app.add_subcommand("successor", "next element of x's segment");
    successor_cmd->add_option("file", file)->required();
    successor_cmd->add_option("x", x)->required();

    auto* involute_cmd = app.add_subcommand("involute", "index-negated (reversed) presentation");
    involute_cmd->add_option("file", file)->required();

    auto* compose_cmd = app.add_subcommand("compose", "substitution composition S o U");
    compose_cmd->add_option("S", file)->required();
    compose_cmd->add_option("U", file2)->required();

    auto* identity_cmd = app.add_subcommand("identity", "identity element of a sign");
    identity_cmd->add_option("sign", sign, "+ or -");

    auto* invert_cmd = app.add_subcommand("invert", "table-backed inverse bijection");
    invert_cmd->add_option("file", file)->required();

    auto* permute_cmd = app.add_subcommand("permute", "embed a finite permutation");
    permute_cmd->add_option("images", values, "images of 0..n-1")->required()->expected(-1);
    permute_cmd->add_option("--sign", sign, "+ or -")->capture_default_str();

    auto* group_cmd = app.add_subcommand("group-check", "group axioms over elements");
    std::vector<std::string> group_files;
    group_cmd->add_option("files", group_files)->required()->expected(-1);

    auto* canonical_cmd = app.add_subcommand("canonical", "canonical partition analysis");
    canonical_cmd->add_option("file", file)->required();

    auto* diagram_cmd = app.add_subcommand("diagram", "block diagram");
    diagram_cmd->add_option("file", file)->required();
    diagram_cmd->add_flag("--dot", opt.dot, "emit a DOT digraph");

    auto* examples_cmd = app.add_subcommand("examples", "write the bundled fixtures");
    examples_cmd->add_option("dir", out_dir)->required();

    // global flags remain usable after the verb
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify_cmd->parsed()) {
        VerificationReport rep = verify(shuffle_from_file(file), opt.upto, opt.budget);
        emit(opt, report_json(rep), report_text(rep));
        return 0;
    }
    if (address_cmd->parsed()) {
        AddressIndex index(shuffle_from_file(file));
        Address a = index.address_of(x, opt.budget);
        emit(opt, address_json(a), to_string(a) + "\n");
        return 0;
    }
    if (value_cmd->parsed()) {
        if (values.empty()) raise(Errc::document_error, "value needs t i1 ... ik");
        Address a;
        a.t = values[0];
        a.indices.assign(values.begin() + 1, values.end());
        AddressIndex index(shuffle_from_file(file));
        Int v = index.value_at(a);
        emit(opt, json{{"value", v}}, std::to_string(v) + "\n");
        return 0;
    }
    if (compare_cmd->parsed()) {
        AddressIndex index(shuffle_from_file(file));
        std::string rel = x == y                             ? "="
                          : index.precedes(x, y, opt.budget) ? "<"
                                                             : ">";
        emit(opt, json{{"x", x}, {"y", y}, {"relation", rel}},
             std::to_string(x) + " " + rel + " " + std::to_string(y) + "\n");
        return 0;
    }
    if (sort_cmd->parsed()) {
        AddressIndex index(shuffle_from_file(file));
        std::vector<Int> sorted = index.sort_prefix(values, opt.budget);
        std::string line;
        for (size_t i = 0; i < sorted.size(); ++i)
            line += (i ? " " : "") + std::to_string(sorted[i]);
        emit(opt, json{{"sorted", sorted}}, line + "\n");
        return 0;
    }
    if (ordertype_cmd->parsed()) {
        std::string ot = ordinal::to_string(order_type(shuffle_from_file(file)));
        emit(opt, json{{"ordertype", ot}}, ot + "\n");
        return 0;
    }
    if (successor_cmd->parsed()) {
        AddressIndex index(shuffle_from_file(file));
        std::optional<Int> s = index.segment_successor(x, opt.budget);
        json j;
        j["successor"] = s ? json(*s) : json(nullptr);
        emit(opt, j, (s ? std::to_string(*s) : "none") + "\n");
        return 0;
    }
    if (involute_cmd->parsed()) {
        std::string doc = shuffle_to_json(algebra::involution(shuffle_from_file(file)));
        emit(opt, json::parse(doc), doc);
        return 0;
    }
    if (compose_cmd->parsed()) {
        MixedShuffle r =
            algebra::compose(shuffle_from_file(file), shuffle_from_file(file2));
        std::string doc = shuffle_to_json(r);
        emit(opt, json::parse(doc), doc);
        return 0;
    }
    if (identity_cmd->parsed()) {
        std::string doc = shuffle_to_json(algebra::identity_element(parse_sign(sign)));
        emit(opt, json::parse(doc), doc);
        return 0;
    }
    if (invert_cmd->parsed()) {
        auto element = algebra::I1Element::wrap(shuffle_from_file(file));
        std::string doc =
            shuffle_to_json(algebra::invert_i1(element, opt.upto, opt.budget).shuffle);
        emit(opt, json::parse(doc), doc);
        return 0;
    }
    if (permute_cmd->parsed()) {
        auto element = algebra::from_finite_permutation(values, parse_sign(sign));
        std::string doc = shuffle_to_json(element.shuffle);
        emit(opt, json::parse(doc), doc);
        return 0;
    }
    if (group_cmd->parsed()) {
        std::vector<algebra::I1Element> elements;
        for (const std::string& f : group_files)
            elements.push_back(algebra::I1Element::wrap(shuffle_from_file(f)));
        algebra::GroupReport rep = algebra::group_check(elements, opt.upto, opt.budget);
        json j;
        j["closure"] = rep.closure_ok;
        j["associativity"] = rep.associativity_ok;
        j["identity"] = rep.identity_ok;
        j["inverses"] = rep.inverses_ok;
        j["failures"] = rep.failures;
        j["passed"] = rep.passed();
        std::string text;
        auto line = [&](const char* name, bool ok) {
            text += std::string(name) + ": " + (ok ? "OK" : "FAIL") + "\n";
        };
        line("closure", rep.closure_ok);
        line("associativity", rep.associativity_ok);
        line("identity", rep.identity_ok);
        line("inverses", rep.inverses_ok);
        for (const std::string& f : rep.failures) text += "  " + f + "\n";
        text += rep.passed() ? "result: PASS\n" : "result: FAIL\n";
        emit(opt, j, text);
        return rep.passed() ? 0 : 1;
    }
    if (canonical_cmd->parsed()) {
        MixedShuffle s = shuffle_from_file(file);
        canonical::PartSequence parts = canonical::part_type_sequence(s);
        canonical::CanonicalResult res = canonical::canonicalize(parts);
        json j;
        j["parts"] = canonical::to_string(parts);
        j["canonical"] = canonical::to_string(res.sequence);
        j["unique"] = res.unique;
        emit(opt, j,
             "parts: " + canonical::to_string(parts) + "\n" +
                 "canonical: " + canonical::to_string(res.sequence) + "\n" +
                 "unique: " + (res.unique ? "yes" : "no") + "\n");
        return 0;
    }
    if (diagram_cmd->parsed()) {
        MixedShuffle s = shuffle_from_file(file);
        std::string d = opt.dot ? canonical::diagram_dot(s) : canonical::diagram(s);
        if (!opt.dot) d += "\n";
        emit(opt, json{{"diagram", d}}, d);
        return 0;
    }
    if (examples_cmd->parsed()) {
        std::filesystem::create_directories(out_dir);
        std::string text;
        json j = json::array();
        for (const std::string& name : fixtures::names()) {
            std::filesystem::path path =
                std::filesystem::path(out_dir) / (name + ".json");
            std::ofstream out(path);
            if (!out) raise(Errc::document_error, "cannot write " + path.string());
            out << fixtures::document(name);
            text += path.string() + "\n";
            j.push_back(path.string());
        }
        emit(opt, json{{"written", j}}, text);
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        json err;
        err["error"] = {{"code", errc_name(e.code)}, {"message", e.what()}};
        if (e.budget_used >= 0) err["error"]["budget_used"] = e.budget_used;
        bool as_json = false;
        for (int i = 1; i < argc; ++i)
            if (std::string(argv[i]) == "--json") as_json = true;
        if (as_json)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << errc_name(e.code) << ": " << e.what() << "\n";
        return exit_code(e.code);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
