#pragma once

#include "pltopo/network.hpp"

#include <json.hpp>

#include <string>

namespace pltopo {

/// Parses network JSON. JSON number literals are read exactly from their
/// decimal text; "p/q" strings are also accepted. Throws ParseError.
Network parse_network(const std::string& text);
Network load_network(const std::string& path);

nlohmann::json network_to_json(const Network& net);
void save_network(const Network& net, const std::string& path);

/// Reads a document whose floating literals are kept as their source text.
nlohmann::json parse_exact_json(const std::string& text);

} // namespace pltopo
