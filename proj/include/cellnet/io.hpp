#pragma once

// File formats.  Networks travel as JSON objects
//   {"cells": n, "inputs": [[t1,...,tn], ...], "label": "optional"}
// with 1-based targets; DOT export draws edge tail -> head with the input
// type as an edge attribute (plus a per-type style for readability).

#include <string>

#include "json.hpp"

#include "cellnet/network.hpp"

namespace cellnet {

nlohmann::json network_to_json(const Network& net);
Network network_from_json(const nlohmann::json& j);

// Parse/serialize including I/O errors mapped to ParseError.
Network read_network_file(const std::string& path);
void write_network_file(const Network& net, const std::string& path);

std::string to_dot(const Network& net);

}  // namespace cellnet
