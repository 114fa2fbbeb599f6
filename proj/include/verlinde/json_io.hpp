#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire formats.
 *
 *   LaurentPoly  {"offset": j0, "coeffs": [c_j0, c_j0+1, ...]}
 *                integer coefficients are numbers, others strings "a/b"
 *   VerObj       {"p": 5, "mults": [a1, ..., a_{p-1}]}
 *   WeightA      {"m": 3, "parts": [3, 1]}
 *   Cyclotomic   {"p": 5, "coords": [c0, ..., c_{p-2}]}
 *   power table  {"p": 5, "m": 2, "rows": [{"i": 0, "mults": [...]}, ...]}
 *                (exterior tables use "r" in place of "m")
 *
 * nlohmann::json keeps object keys sorted, so output is deterministic.
 */

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "numeric.hpp"
#include "verlinde_ring.hpp"
#include "weyl.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace verlinde {

using json = nlohmann::json;

namespace detail {

inline json rational_to_json(const Rational& c) {
    if (is_integer(c)) {
        const Integer n = boost::multiprecision::numerator(c);
        if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
            return n.convert_to<std::int64_t>();
    }
    return c.str();
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw invalid_input("not a rational number: " + j.dump());
        }
    }
    throw invalid_input("expected an integer or a rational string, got " + j.dump());
}

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw invalid_input(std::string("JSON object is missing key \"") + key + "\"");
    return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw invalid_input(std::string("JSON field ") + what + " has the wrong type: " + j.dump());
    }
}

}  // namespace detail

inline json to_json(const LaurentPoly& f) {
    json coeffs = json::array();
    if (f.is_zero()) return {{"offset", 0}, {"coeffs", coeffs}};
    for (auto j = f.min_exponent(); j <= f.max_exponent(); ++j) coeffs.push_back(detail::rational_to_json(f.coeff(j)));
    return {{"offset", f.min_exponent()}, {"coeffs", coeffs}};
}

inline LaurentPoly laurent_from_json(const json& j) {
    const auto offset = detail::get_as<std::int64_t>(detail::field(j, "offset"), "offset");
    const auto& coeffs = detail::field(j, "coeffs");
    if (!coeffs.is_array()) throw invalid_input("\"coeffs\" must be an array");
    LaurentPoly out;
    std::int64_t k = offset;
    for (const auto& c : coeffs) out.set(k++, detail::rational_from_json(c));
    return out;
}

inline json to_json(const VerObj& x) { return {{"p", x.p()}, {"mults", x.mults()}}; }

inline VerObj verobj_from_json(const json& j) {
    return VerObj(detail::get_as<std::int64_t>(detail::field(j, "p"), "p"),
                  detail::get_as<std::vector<std::int64_t>>(detail::field(j, "mults"), "mults"));
}

inline json to_json(const WeightA& w) {
    // trailing zeros are implicit
    auto parts = w.parts();
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return {{"m", w.m()}, {"parts", parts}};
}

inline WeightA weight_from_json(const json& j) {
    return WeightA(detail::get_as<std::int64_t>(detail::field(j, "m"), "m"),
                   detail::get_as<std::vector<std::int64_t>>(detail::field(j, "parts"), "parts"));
}

inline json to_json(const Cyclotomic& x) {
    json coords = json::array();
    for (const auto& c : x.coords()) coords.push_back(detail::rational_to_json(Rational(c)));
    return {{"p", x.p()}, {"coords", coords}};
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
    const auto p = detail::get_as<std::int64_t>(detail::field(j, "p"), "p");
    std::vector<Integer> coords;
    for (const auto& c : detail::field(j, "coords")) {
        const Rational r = detail::rational_from_json(c);
        if (!is_integer(r)) throw invalid_input("cyclotomic coordinates must be integers");
        coords.push_back(boost::multiprecision::numerator(r));
    }
    return Cyclotomic::from_coords(p, std::move(coords));
}

/// One row of a symmetric or exterior power table.
struct PowerRow {
    std::int64_t i;
    VerObj object;
};

/// {"p", key: index, "rows": [{"i", "mults"}]}; key is "m" or "r".
inline json power_table_to_json(std::int64_t p, const char* key, std::int64_t index,
                                const std::vector<PowerRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back({{"i", row.i}, {"mults", row.object.mults()}});
    return {{"p", p}, {key, index}, {"rows", arr}};
}

inline std::vector<PowerRow> power_table_from_json(const json& j) {
    const auto p = detail::get_as<std::int64_t>(detail::field(j, "p"), "p");
    std::vector<PowerRow> out;
    for (const auto& row : detail::field(j, "rows"))
        out.push_back({detail::get_as<std::int64_t>(detail::field(row, "i"), "i"),
                       VerObj(p, detail::get_as<std::vector<std::int64_t>>(detail::field(row, "mults"), "mults"))});
    return out;
}

}  // namespace verlinde
