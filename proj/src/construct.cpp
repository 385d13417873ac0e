#include "gamma3/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace gamma3 {

Edge::Edge(Node a, Node b) : u(a), v(b) {
    if (v < u) std::swap(u, v);
}

std::string to_string(const Edge& e) {
    return "{" + to_string(e.u) + "," + to_string(e.v) + "}";
}

namespace {

bool in_set_range(const Node& n, int d) {
    return n.i >= 1 && n.i <= d && n.j >= 1 && n.j <= d;
}

bool uses_floor_exception(const VariantConfig& variant) {
    switch (variant.kind) {
        case Variant::OriginalErroneous: return false;
        case Variant::CorrectedS1: return true;
        case Variant::AlternativeS2:
            return variant.alt_mid_rule == AltMidRule::KeepFloorException;
    }
    return false;
}

}  // namespace

std::optional<int> mid_for_target(Node target, int d, const VariantConfig& variant) {
    detail::require_dim(d);
    const int i = target.i;
    const int l = target.j;
    if (!in_set_range(target, d) || target == Node{d, d}) {
        throw std::invalid_argument("target " + to_string(target) + " is not in J for d=" +
                                    std::to_string(d));
    }

    const bool floor_case = uses_floor_exception(variant) &&
                            std::minmax(i, l) == std::minmax(d - 1, d);
    // ceil((i+l)/2) + [i = l], or floor((i+l)/2) in the exceptional case
    const int j = floor_case ? (i + l) / 2 : (i + l + 1) / 2 + (i == l ? 1 : 0);

    const Node excluded = variant.excluded_corner(d);
    if (Node{i, j} == excluded || Node{j, l} == excluded) {
        return std::nullopt;
    }
    return j;
}

S2 build_s2(int d, const VariantConfig& variant) {
    const IndexSets sets = index_sets(d, variant);
    S2 result;
    result.entries.reserve(sets.J.size());
    for (const Node& target : sets.J) {
        const std::optional<int> mid = mid_for_target(target, d, variant);
        if (!mid) {
            result.uncovered.push_back(target);
            continue;
        }
        S2Entry entry;
        entry.target = target;
        entry.mid = *mid;
        entry.endpoints = Edge(Node{target.i, *mid}, Node{*mid, target.j});
        result.entries.push_back(std::move(entry));
    }
    return result;
}

Gamma3 build_gamma3(std::span<const S2Entry> entries, std::vector<Node> vertices) {
    std::sort(vertices.begin(), vertices.end());
    Gamma3 g;
    g.vertices = std::move(vertices);

    const auto in_vertices = [&g](const Node& n) {
        return std::binary_search(g.vertices.begin(), g.vertices.end(), n);
    };

    std::map<Edge, std::vector<Node>> merged;
    for (const S2Entry& entry : entries) {
        if (!in_vertices(entry.endpoints.u) || !in_vertices(entry.endpoints.v)) {
            throw std::invalid_argument("S2 entry for target " + to_string(entry.target) +
                                        " has endpoint outside the vertex set");
        }
        merged[entry.endpoints].push_back(entry.target);
    }
    g.edges.reserve(merged.size());
    for (auto& [edge, targets] : merged) {
        std::sort(targets.begin(), targets.end());
        g.edges.push_back(EdgeRecord{edge, std::move(targets)});
    }
    return g;
}

WeightTriple base_weight(Node n) {
    const int diff = n.i - n.j;
    const int s = sign_half(diff);
    const unsigned k = static_cast<unsigned>(std::abs(diff));
    WeightTriple t;
    t.w[color_residue(diff)] = pow5(k + 1);
    t.w[color_residue(diff - s)] = 3 * pow5(k);
    t.w[color_residue(diff + s)] = 0;
    return t;
}

WeightTable weights(int d, const VariantConfig& variant) {
    const IndexSets sets = index_sets(d, variant);
    WeightTable table;
    for (const Node& n : sets.I) {
        table.emplace(n, base_weight(n));
    }
    if (variant.kind == Variant::CorrectedS1 && d >= 2) {
        table[Node{d - 1, d - 1}] = WeightTriple{{Weight(15), Weight(0), Weight(15)}};
        table[Node{d - 1, d}] = WeightTriple{{Weight(25), Weight(0), Weight(20)}};
        table[Node{d, d - 1}] = WeightTriple{{Weight(3), Weight(25), Weight(0)}};
    }
    return table;
}

WeightTable scaled(const WeightTable& table, const Weight& factor) {
    WeightTable result;
    for (const auto& [node, triple] : table) {
        WeightTriple t;
        for (int m = 0; m < 3; ++m) t.w[m] = triple.w[m] * factor;
        result.emplace(node, std::move(t));
    }
    return result;
}

ColoringRule ColoringRule::target_diff() {
    return ColoringRule{RuleKind::TargetDiff, "target-diff"};
}

ColoringRule ColoringRule::shared_support() {
    return ColoringRule{RuleKind::SharedSupport, "shared-support"};
}

ColoringRule ColoringRule::endpoint_diff() {
    return ColoringRule{RuleKind::EndpointDiff, "endpoint-diff"};
}

std::optional<ColoringRule> parse_rule(std::string_view name) {
    if (name == "target-diff") return ColoringRule::target_diff();
    if (name == "shared-support") return ColoringRule::shared_support();
    if (name == "endpoint-diff") return ColoringRule::endpoint_diff();
    return std::nullopt;
}

namespace {

std::uint8_t residues_of_edge(const EdgeRecord& e, RuleKind basis) {
    std::uint8_t residues = 0;
    if (basis == RuleKind::TargetDiff) {
        if (e.targets.empty()) {
            throw std::invalid_argument("target-diff coloring on edge " + to_string(e.edge) +
                                        " with no target");
        }
        for (const Node& t : e.targets) {
            residues |= static_cast<std::uint8_t>(1u << color_residue(t.i - t.j));
        }
    } else {
        residues = static_cast<std::uint8_t>(1u << color_residue(e.edge.u.i - e.edge.u.j));
    }
    return residues;
}

}  // namespace

std::uint8_t color_of_edge(const EdgeRecord& e, const ColoringRule& rule, const WeightTable& w) {
    switch (rule.kind) {
        case RuleKind::TargetDiff:
        case RuleKind::EndpointDiff:
            return residues_of_edge(e, rule.kind);
        case RuleKind::SharedSupport: {
            const auto wu = w.find(e.edge.u);
            const auto wv = w.find(e.edge.v);
            if (wu == w.end() || wv == w.end()) {
                throw std::invalid_argument("shared-support coloring: edge " + to_string(e.edge) +
                                            " has an endpoint without a weight triple");
            }
            return wu->second.support() & wv->second.support();
        }
        case RuleKind::Custom: {
            const std::uint8_t residues = residues_of_edge(e, rule.basis);
            std::uint8_t mask = 0;
            for (int r = 0; r < 3; ++r) {
                if (has_color(residues, r)) mask |= rule.residue_colors[static_cast<size_t>(r)];
            }
            return mask;
        }
    }
    return 0;
}

}  // namespace gamma3
