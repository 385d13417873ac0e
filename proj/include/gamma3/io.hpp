#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gamma3/render.hpp"
#include "gamma3/verify.hpp"

namespace gamma3 {

inline constexpr int kGraphSchemaVersion = 1;
inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr int kRuleSchemaVersion = 1;

// Malformed or unsupported documents; message carries the offending location.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The interchange document: everything needed to re-render or re-check a
// built construction without rebuilding it.
struct GraphDocument {
    int d = 0;
    VariantConfig variant;
    ColoringRule rule;
    Gamma3 graph;
    WeightTable weights;
    std::vector<Node> uncovered;

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument build_graph_document(int d, const VariantConfig& variant, const ColoringRule& rule);

nlohmann::ordered_json graph_to_json(const GraphDocument& doc);
GraphDocument graph_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
nlohmann::ordered_json diff_to_json(int d, const VariantConfig& from, const VariantConfig& to,
                                    const VariantDiff& diff);
nlohmann::ordered_json exploration_to_json(const RuleExploration& exploration);

ColoringRule rule_from_json(const nlohmann::ordered_json& j);

std::string json_text(const nlohmann::ordered_json& j);

std::string read_text_file(const std::filesystem::path& path);
// Writes via a temp file + rename so readers never observe a partial document.
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

}  // namespace gamma3
