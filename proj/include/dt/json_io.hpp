#pragma once

#include <string>

#include <json.hpp>

#include "dt/partitions.hpp"
#include "dt/series.hpp"
#include "dt/torus.hpp"

namespace dt {

/// Series serialize as {"var":"q","order":N,"coeffs":["p/q",...]} with
/// exact fraction strings, never decimals.
inline nlohmann::json series_to_json(const Series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int m = 0; m <= s.order(); ++m) coeffs.push_back(s.coefficient(m).get_str());
    return nlohmann::json{{"var", "q"}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline Series series_from_json(const nlohmann::json& j) {
    const int order = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return Series(order, std::move(coeffs));
}

inline nlohmann::json staircase_to_json(const Staircase& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const Exponent& e : s) out.push_back(e);
    return out;
}

inline Staircase staircase_from_json(const nlohmann::json& j) {
    Staircase s;
    for (const auto& row : j) s.push_back(row.get<Exponent>());
    std::sort(s.begin(), s.end());
    return s;
}

inline MonomialIdeal ideal_from_json(const nlohmann::json& j, int expected_nvars = -1) {
    Staircase s = staircase_from_json(j);
    int nvars = expected_nvars;
    if (nvars < 0) nvars = s.empty() ? 1 : static_cast<int>(s.front().size());
    return MonomialIdeal(nvars, std::move(s));
}

} // namespace dt
