// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/io.hpp"

#include <fstream>
#include <sstream>

#include "priodpa/errors.hpp"

namespace priodpa {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw FormatError(std::string("missing or non-integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

std::pair<int, int> read_pair(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw FormatError("expected a pair [a,b], got " + j.dump());
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

} // namespace

json graph_to_json(const Graph& graph) {
    switch (graph.kind()) {
    case GraphKind::path:
        return json{{"kind", "path"}, {"length", graph.path_length()}};
    case GraphKind::grid:
        return json{{"kind", "grid"}, {"rows", graph.rows()}, {"cols", graph.cols()}};
    case GraphKind::tree: {
        json edges = json::array();
        for (const auto& e : graph.edges()) {
            edges.push_back(json::array({e.u, e.v}));
        }
        return json{{"kind", "tree"}, {"edges", edges}};
    }
    }
    throw std::logic_error("unknown graph kind");
}

std::shared_ptr<const Graph> graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw FormatError("graph must be an object with a string 'kind'");
    }
    const auto kind = j.at("kind").get<std::string>();
    try {
        if (kind == "path") {
            return std::make_shared<const Graph>(Graph::path(require_int(j, "length")));
        }
        if (kind == "grid") {
            return std::make_shared<const Graph>(Graph::grid(require_int(j, "rows"), require_int(j, "cols")));
        }
        if (kind == "tree") {
            if (!j.contains("edges") || !j.at("edges").is_array()) {
                throw FormatError("tree graph needs an 'edges' array");
            }
            std::vector<Edge> edges;
            for (const auto& e : j.at("edges")) {
                const auto [u, v] = read_pair(e);
                edges.push_back(Edge{std::min(u, v), std::max(u, v)});
            }
            return std::make_shared<const Graph>(Graph::tree(std::move(edges)));
        }
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid graph: ") + e.what());
    }
    throw FormatError("unknown graph kind '" + kind + "'");
}

json instance_to_json(const Instance& instance) {
    json reqs = json::array();
    for (const auto& r : instance.requests()) {
        reqs.push_back(json::array({r.x(), r.y()}));
    }
    return json{{"graph", graph_to_json(instance.graph())}, {"requests", reqs}};
}

Instance instance_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("requests") || !j.at("requests").is_array()) {
        throw FormatError("instance needs 'graph' and 'requests'");
    }
    auto graph = graph_from_json(j.at("graph"));
    std::vector<Request> reqs;
    try {
        for (const auto& r : j.at("requests")) {
            const auto [a, b] = read_pair(r);
            reqs.emplace_back(a, b);
        }
        return Instance(std::move(graph), std::move(reqs));
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid request: ") + e.what());
    }
}

std::string canonical_json(const Instance& instance) { return instance_to_json(instance).dump(); }

std::string instance_hash(const Instance& instance) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : canonical_json(instance)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

json tape_to_json(const AdviceTape& tape) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex;
    const auto& bits = tape.bits();
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            nibble <<= 1;
            if (i + k < bits.size() && bits[i + k]) {
                nibble |= 1;
            }
        }
        hex.push_back(digits[nibble]);
    }
    return json{{"bits", bits.size()}, {"hex", hex}};
}

AdviceTape tape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("hex") || !j.at("hex").is_string()) {
        throw FormatError("advice tape needs 'bits' and 'hex'");
    }
    const auto n = require_int(j, "bits");
    const auto hex = j.at("hex").get<std::string>();
    if (n < 0 || hex.size() != static_cast<std::size_t>((n + 3) / 4)) {
        throw FormatError("advice tape: hex length does not match bit count");
    }
    std::vector<bool> bits;
    for (char c : hex) {
        int v = 0;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else {
            throw FormatError(std::string("advice tape: bad hex digit '") + c + "'");
        }
        for (int k = 3; k >= 0; --k) {
            bits.push_back(((v >> k) & 1) != 0);
        }
    }
    for (std::size_t i = static_cast<std::size_t>(n); i < bits.size(); ++i) {
        if (bits[i]) {
            throw FormatError("advice tape: nonzero padding");
        }
    }
    bits.resize(static_cast<std::size_t>(n));
    return AdviceTape(std::move(bits));
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

Instance read_instance(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }

} // namespace priodpa
