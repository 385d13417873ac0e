#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamma3/model.hpp"

namespace gamma3 {

// Unordered vertex pair, normalized so that u <= v.
struct Edge {
    Node u;
    Node v;

    Edge() = default;
    Edge(Node a, Node b);

    friend auto operator<=>(const Edge&, const Edge&) = default;

    bool touches(const Node& n) const { return u == n || v == n; }
    Node other(const Node& n) const { return u == n ? v : u; }
};

std::string to_string(const Edge& e);

// One element of S2: the length-2 path {(i,j),(j,l)} serving target (i,l).
struct S2Entry {
    Node target;
    int mid = 0;
    Edge endpoints;

    friend bool operator==(const S2Entry&, const S2Entry&) = default;
};

struct S2 {
    std::vector<S2Entry> entries;  // ordered by target
    std::vector<Node> uncovered;   // targets with no valid entry, ordered
};

// Midpoint j for a target (i,l) in J, or nullopt when an implied endpoint
// falls outside I and the entry is dropped. Rejects targets outside J.
std::optional<int> mid_for_target(Node target, int d, const VariantConfig& variant);

S2 build_s2(int d, const VariantConfig& variant);

// Edge of Gamma3 together with every target whose S2 entry produced it.
struct EdgeRecord {
    Edge edge;
    std::vector<Node> targets;  // sorted

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct Gamma3 {
    std::vector<Node> vertices;     // = I, sorted; isolated vertices permitted
    std::vector<EdgeRecord> edges;  // sorted by edge, duplicate edges merged
};

// Rejects entries with an endpoint outside the vertex set.
Gamma3 build_gamma3(std::span<const S2Entry> entries, std::vector<Node> vertices);

// The unmodified weight formula: 5^{|i-j|+1} at m = i-j, 3*5^{|i-j|} one step
// against the sign, 0 one step with it (residues mod 3).
WeightTriple base_weight(Node n);

using WeightTable = std::map<Node, WeightTriple>;

// Base formula on all of I; CorrectedS1 additionally pins the three nodes
// next to the (d,d) corner to fixed triples.
WeightTable weights(int d, const VariantConfig& variant);

// Every value multiplied by factor; structure-preserving for factor > 0.
WeightTable scaled(const WeightTable& table, const Weight& factor);

enum class RuleKind {
    TargetDiff,     // color of an edge = (i - l) mod 3 of its target(s)
    SharedSupport,  // colors where both endpoint weights are nonzero
    EndpointDiff,   // (i - j) mod 3 of the lexicographically smaller endpoint
    Custom,         // residue basis remapped through a table
};

struct ColoringRule {
    RuleKind kind = RuleKind::TargetDiff;
    std::string name = "target-diff";

    // Custom rules only: residues computed by `basis` are mapped through
    // residue_colors (bitmask over m per residue).
    RuleKind basis = RuleKind::TargetDiff;
    std::array<std::uint8_t, 3> residue_colors{};

    static ColoringRule target_diff();
    static ColoringRule shared_support();
    static ColoringRule endpoint_diff();

    friend bool operator==(const ColoringRule&, const ColoringRule&) = default;
};

std::optional<ColoringRule> parse_rule(std::string_view name);

inline bool has_color(std::uint8_t mask, int m) { return (mask >> m) & 1u; }

// Bitmask over m in {0,1,2}. TargetDiff on an edge with no targets is a
// contract violation; SharedSupport requires both endpoints in the table.
std::uint8_t color_of_edge(const EdgeRecord& e, const ColoringRule& rule, const WeightTable& w);

}  // namespace gamma3
