#ifndef YSYS_PAIR_JSON_HPP
#define YSYS_PAIR_JSON_HPP

#include <string>

#include <json.hpp>

#include "ysys/polymat.hpp"

namespace ysys {

// Canonical text form of a datum:
//   {"I":[labels...],"n":[{"i":..,"j":..,"p":..,"v":..},...],"r":{label:r_i,...}}
// with n sorted by (position of i, position of j, p). Serialising a parsed
// canonical document reproduces it byte for byte.

nlohmann::json to_json(const YDatum& d);
/// Parses and validates; diagnostics name the offending field.
YDatum ydatum_from_json(const nlohmann::json& j);

std::string to_canonical_text(const YDatum& d);
YDatum parse_ydatum(const std::string& text);

/// Coefficient-list export: each entry is [[exponent, coeff], ...].
nlohmann::json matrices_to_json(const MatrixPair& p);

} // namespace ysys

#endif
