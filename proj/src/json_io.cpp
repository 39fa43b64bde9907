#include "qloz/json_io.hpp"

#include <json.hpp>

#include "qloz/errors.hpp"

namespace qloz {

using nlohmann::json;

std::string qpoly_to_json(const QPoly& p) {
    json terms = json::array();
    for (auto& [e, v] : p.coeffs()) terms.push_back(json::array({e, v.str()}));
    return json{{"poly", terms}}.dump();
}

QPoly qpoly_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad polynomial json: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("poly") || !j["poly"].is_array())
        throw ParseError("polynomial json must be {\"poly\": [[exp, \"coeff\"], ...]}");
    QPoly p;
    for (const auto& term : j["poly"]) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_string())
            throw ParseError("each term must be [exponent, \"coefficient\"]");
        long long e = term[0].get<long long>();
        if (e < 0) throw ParseError("negative exponent in polynomial");
        BigInt c;
        try {
            c = BigInt(term[1].get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("bad coefficient string");
        }
        p.add_term(e, c);
    }
    return p;
}

std::string region_spec_to_json(const RegionSpec& spec) {
    json params = json::object();
    const auto& names = RegionSpec::param_names(spec.family);
    for (std::size_t k = 0; k < names.size(); ++k) params[names[k]] = spec.params[k];
    return json{{"family", RegionSpec::family_name(spec.family)}, {"params", params}}.dump();
}

RegionSpec region_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad region spec json: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw ParseError("region spec needs a \"family\" string");

    std::string fam = j["family"].get<std::string>();
    RegionSpec::Family family;
    if (fam == "hex")
        family = RegionSpec::Family::Hex;
    else if (fam == "k")
        family = RegionSpec::Family::K;
    else if (fam == "q")
        family = RegionSpec::Family::Q;
    else if (fam == "b")
        family = RegionSpec::Family::B;
    else if (fam == "f")
        family = RegionSpec::Family::F;
    else
        throw ParseError("unknown family: " + fam);

    const auto& names = RegionSpec::param_names(family);
    RegionSpec spec;
    spec.family = family;
    spec.params.assign(names.size(), 0);

    json params = j.value("params", json::object());
    if (!params.is_object()) throw ParseError("\"params\" must be an object");
    for (auto it = params.begin(); it != params.end(); ++it) {
        bool known = false;
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (names[k] == it.key()) {
                if (!it.value().is_number_integer())
                    throw ParseError("parameter " + it.key() + " must be an integer");
                long long v = it.value().get<long long>();
                if (v < 0) throw ParseError("parameter " + it.key() + " must be nonnegative");
                spec.params[k] = v;
                known = true;
                break;
            }
        }
        if (!known) throw ParseError("unknown parameter " + it.key() + " for family " + fam);
    }
    return spec;
}

}  // namespace qloz
