#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "plg/action_classifier.hpp"
#include "plg/ping_pong.hpp"
#include "plg/verbal_orders.hpp"

namespace plg {

using Json = nlohmann::ordered_json;

// Readers throw Error(MalformedInput) naming the offending field.

Json to_json(const PLHomeo& f);
PLHomeo homeo_from_json(const Json& j, const std::string& where = "map");

Json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j, const std::string& where = "set");

Json to_json(const PingPongCertificate& c);
PingPongCertificate certificate_from_json(const Json& j);

/// {"a": PLHomeo, "b": PLHomeo, ...}; generators must be a contiguous prefix of the alphabet.
Json action_to_json(const Assignment& action);
Assignment action_from_json(const Json& j, const std::string& where = "action");

Json to_json(const DynOrder& o);
DynOrder order_from_json(const Json& j);

Json to_json(const Classification& c);

/// Parses a whole file; syntax errors carry the parser's line and column.
Json read_json_file(const std::string& path);

}  // namespace plg
