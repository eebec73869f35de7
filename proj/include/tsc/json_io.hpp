// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tsc/graph.hpp"
#include "tsc/search.hpp"

namespace tsc {

using Json = nlohmann::json;

// Field record: {p, r, poly: [c0..cr], omega: [a0..a_{r-1}]}.
Json field_to_json(const FieldTable& f);
FieldRef field_from_json(const Json& j);

// Graph record: {label, p, r, k, colors: [color(omega^j)], field}.
Json graph_to_json(const ColoredCayleyGraph& g);
ColoredCayleyGraph graph_from_json(const Json& j);

// Matrix record: {p, r, rows: [[...], ...]}.
Json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const Json& j);

// Certificate record: {outcome, witness?, candidates_enumerated,
// candidates_pruned, search_space, witness_count, wall_time_s, fast_path,
// config}.
Json certificate_to_json(const SearchCertificate& cert);
SearchCertificate certificate_from_json(const Json& j);

// Strict parse; malformed text raises ParseError.
Json parse_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Manifest: command line, version, input hashes, output paths, timestamps.
Json run_manifest(const std::string& command_line,
                  const std::vector<std::pair<std::string, std::string>>& inputs,
                  const std::vector<std::string>& outputs);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace tsc
