#pragma once

#include "superwig/wigner.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sw {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const CoefficientValue& v);
Json to_json(const Weight& w);
Json to_json(const GTPattern& p);
Json to_json(const EtaReport& r);
Json to_json(const RepModule& M);

// "1,0,-2" with the even|odd split taken from the shape.
Weight parse_weight(const Shape& s, const std::string& text);
// Rows separated by ';', top row first: "1,0;1".
GTPattern parse_pattern(const Shape& s, const std::string& text);
std::vector<long> parse_labels(const std::string& text);

std::string direction_name(Direction d);
Direction parse_direction(const std::string& s);

} // namespace sw
