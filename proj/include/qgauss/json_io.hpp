#pragma once

#include <string>

#include <json.hpp>

#include "qgauss/rat_func.hpp"

namespace qgauss {

// Wire schema: {"num": {"<exp>": ["<re>", "<im>"], ...}, "den": {...}}
// with exponents as decimal integer strings and components as exact
// rational strings.  Round-trips are exact.

namespace detail {

inline nlohmann::json spoly_to_json(const SPoly& p) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [e, c] : p.terms())
        obj[std::to_string(e)] = {rational_to_string(c.re()), rational_to_string(c.im())};
    return obj;
}

inline SPoly spoly_from_json(const nlohmann::json& obj) {
    if (!obj.is_object()) throw std::invalid_argument("SPoly JSON: expected object");
    SPoly p;
    for (const auto& [key, value] : obj.items()) {
        long e = std::stol(key);
        if (!value.is_array() || value.size() != 2)
            throw std::invalid_argument("SPoly JSON: coefficient must be [re, im]");
        GaussRat c(rational_from_string(value[0].get<std::string>()),
                   rational_from_string(value[1].get<std::string>()));
        p.add_to_coeff(e, c);
    }
    return p;
}

}  // namespace detail

inline nlohmann::json rat_func_to_json(const RatFunc& f) {
    return {{"num", detail::spoly_to_json(f.num())}, {"den", detail::spoly_to_json(f.den())}};
}

inline RatFunc rat_func_from_json(const nlohmann::json& j) {
    if (!j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("RatFunc JSON: expected num and den");
    return RatFunc(detail::spoly_from_json(j["num"]), detail::spoly_from_json(j["den"]));
}

inline std::string to_json_string(const RatFunc& f) { return rat_func_to_json(f).dump(); }

inline RatFunc rat_func_from_json_string(const std::string& text) {
    return rat_func_from_json(nlohmann::json::parse(text));
}

}  // namespace qgauss
