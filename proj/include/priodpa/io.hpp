// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON formats for instances and advice tapes.
//
//   instance: {"graph": {"kind":"path","length":L} | {"kind":"tree","edges":[[u,v],...]}
//                       | {"kind":"grid","rows":R,"cols":C},
//              "requests": [[x,y],...]}
//   tape:     {"bits": N, "hex": "..."}   lowercase, most significant bit first, zero padded

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "priodpa/engine.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

[[nodiscard]] nlohmann::json graph_to_json(const Graph& graph);
[[nodiscard]] std::shared_ptr<const Graph> graph_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json instance_to_json(const Instance& instance);
[[nodiscard]] Instance instance_from_json(const nlohmann::json& j);

// Compact serialization with sorted keys; stable across runs.
[[nodiscard]] std::string canonical_json(const Instance& instance);
// FNV-1a over the canonical JSON, as 16 hex digits.
[[nodiscard]] std::string instance_hash(const Instance& instance);

[[nodiscard]] nlohmann::json tape_to_json(const AdviceTape& tape);
[[nodiscard]] AdviceTape tape_from_json(const nlohmann::json& j);

// Throws FormatError on unreadable or malformed files.
[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);
[[nodiscard]] Instance read_instance(const std::filesystem::path& path);

} // namespace priodpa
