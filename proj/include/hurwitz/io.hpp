#pragma once

// Stable text encodings: atlas records as JSON or CSV, and the
// "label:multiplicity,..." divisor format used on the command line.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hurwitz/core.hpp"
#include "hurwitz/kummer.hpp"

namespace hurwitz::io {

using ordered_json = nlohmann::ordered_json;

inline ordered_json label_to_json(const ComponentLabel& label) {
    ordered_json record;
    record["g"] = label.g;
    record["m"] = label.m;
    record["n"] = label.n.value();
    record["g_prime"] = label.g_prime;
    record["nu"] = label.canonical_kr.k().nu();
    record["k"] = label.canonical_kr.k().exponents();
    record["r"] = label.canonical_kr.r().counts();
    record["aut_orbit_size"] = label.aut_orbit_size;
    record["psi_degree"] = label.psi_degree;
    record["etale_part"] = label.etale_part;
    record["exponent_modulus"] = label.exponent_modulus;
    return record;
}

/// Rebuilds a label from its record and recomputes all metadata.  Any
/// disagreement between stored and recomputed values is an error: an atlas
/// cannot be deserialized into something the library would not produce.
inline ComponentLabel label_from_json(const ordered_json& record) {
    const CyclicOrder order(record.at("n").get<Int>());
    const HurwitzDatum k(order, record.at("k").get<std::vector<Int>>());
    const MarkingVector r(order, record.at("r").get<std::vector<Int>>());
    const ComponentLabel label =
        make_component_label(record.at("g_prime").get<Int>(), BranchingDatum(k, r));

    const bool consistent = label.g == record.at("g").get<Int>() &&
                            label.m == record.at("m").get<Int>() &&
                            label.canonical_kr.k().nu() == record.at("nu").get<Int>() &&
                            label.canonical_kr.k().exponents() == record.at("k").get<std::vector<Int>>() &&
                            label.canonical_kr.r().counts() == record.at("r").get<std::vector<Int>>() &&
                            label.aut_orbit_size == record.at("aut_orbit_size").get<Int>() &&
                            label.psi_degree == record.at("psi_degree").get<std::uint64_t>() &&
                            label.etale_part == record.at("etale_part").get<Int>() &&
                            label.exponent_modulus == record.at("exponent_modulus").get<Int>();
    if (!consistent)
        throw InvalidDatum("atlas record disagrees with its recomputed label");
    return label;
}

inline ordered_json atlas_to_json(const std::vector<ComponentLabel>& atlas) {
    ordered_json array = ordered_json::array();
    for (const ComponentLabel& label : atlas) array.push_back(label_to_json(label));
    return array;
}

inline std::string atlas_to_json_string(const std::vector<ComponentLabel>& atlas) {
    return atlas_to_json(atlas).dump(2) + "\n";
}

inline std::vector<ComponentLabel> atlas_from_json_string(const std::string& text) {
    const ordered_json array = ordered_json::parse(text);
    if (!array.is_array()) throw InvalidDatum("atlas JSON must be an array of records");
    std::vector<ComponentLabel> atlas;
    atlas.reserve(array.size());
    for (const auto& record : array) atlas.push_back(label_from_json(record));
    return atlas;
}

namespace detail {

inline std::string join_semicolons(const std::vector<Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace detail

/// CSV flattening of an atlas: same fields as the JSON encoding, with the
/// exponent and marking vectors joined by semicolons.
inline std::string atlas_to_csv(const std::vector<ComponentLabel>& atlas) {
    std::string out =
        "g,m,n,g_prime,nu,k,r,aut_orbit_size,psi_degree,etale_part,exponent_modulus\n";
    for (const ComponentLabel& label : atlas) {
        out += std::to_string(label.g) + ',' + std::to_string(label.m) + ',' +
               std::to_string(label.n.value()) + ',' + std::to_string(label.g_prime) + ',' +
               std::to_string(label.canonical_kr.k().nu()) + ',' +
               detail::join_semicolons(label.canonical_kr.k().exponents()) + ',' +
               detail::join_semicolons(label.canonical_kr.r().counts()) + ',' +
               std::to_string(label.aut_orbit_size) + ',' + std::to_string(label.psi_degree) +
               ',' + std::to_string(label.etale_part) + ',' +
               std::to_string(label.exponent_modulus) + '\n';
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline Int parse_int(std::string_view s) {
    Int value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw InvalidDatum("cannot parse integer from '" + std::string(s) + "'");
    return value;
}

} // namespace detail

/// Parses "label:multiplicity,label:multiplicity,...".  The label "inf" is
/// the point at infinity; any other token is an affine point label.  An
/// empty string denotes the empty divisor.
inline kummer::KummerDivisor parse_divisor(CyclicOrder order, std::string_view text) {
    std::vector<kummer::DivisorEntry> support;
    std::string_view rest = detail::trim(text);
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        std::string_view token = detail::trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{}
                                               : detail::trim(rest.substr(comma + 1));
        const std::size_t colon = token.rfind(':');
        if (colon == std::string_view::npos || colon == 0)
            throw InvalidDatum("divisor entry '" + std::string(token) +
                               "' is not label:multiplicity");
        support.push_back({std::string(detail::trim(token.substr(0, colon))),
                           detail::parse_int(detail::trim(token.substr(colon + 1)))});
    }
    return kummer::KummerDivisor(order, std::move(support));
}

} // namespace hurwitz::io
