#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gamma3/construct.hpp"

using namespace gamma3;

namespace {

const S2Entry* entry_for(const S2& s2, Node target) {
    for (const S2Entry& e : s2.entries) {
        if (e.target == target) return &e;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("midpoint rule") {
    SUBCASE("floor exception at {i,l} = {d-1,d} for corrected-s1") {
        CHECK(mid_for_target(Node{6, 5}, 6, kCorrectedS1) == 5);
        CHECK(mid_for_target(Node{5, 6}, 6, kCorrectedS1) == 5);
    }
    SUBCASE("the original rule drops both entries next to the corner") {
        CHECK(!mid_for_target(Node{6, 5}, 6, kOriginal).has_value());
        CHECK(!mid_for_target(Node{5, 6}, 6, kOriginal).has_value());
    }
    SUBCASE("diagonal targets get the +1 bump") {
        CHECK(mid_for_target(Node{4, 4}, 6, kCorrectedS1) == 5);
        CHECK(mid_for_target(Node{4, 4}, 6, kOriginal) == 5);
    }
    SUBCASE("plain ceil everywhere else") {
        CHECK(mid_for_target(Node{1, 3}, 6, kCorrectedS1) == 2);
        CHECK(mid_for_target(Node{2, 1}, 3, kCorrectedS1) == 2);
    }
    SUBCASE("alternative-s2 keeps the corner entry under uniform-ceil") {
        CHECK(mid_for_target(Node{6, 5}, 6, kAlternativeS2) == 6);
        CHECK(mid_for_target(Node{5, 6}, 6, kAlternativeS2) == 6);
    }
    SUBCASE("keep-floor at d=2 would need (1,1), which alternative-s2 excludes") {
        CHECK(!mid_for_target(Node{1, 2}, 2, kAlternativeS2KeepFloor).has_value());
        CHECK(!mid_for_target(Node{2, 1}, 2, kAlternativeS2KeepFloor).has_value());
        CHECK(mid_for_target(Node{1, 2}, 3, kAlternativeS2KeepFloor) == 1);
    }
    SUBCASE("targets outside J are rejected") {
        CHECK_THROWS_AS(mid_for_target(Node{6, 6}, 6, kCorrectedS1), std::invalid_argument);
        CHECK_THROWS_AS(mid_for_target(Node{0, 3}, 6, kCorrectedS1), std::invalid_argument);
        CHECK_THROWS_AS(mid_for_target(Node{7, 3}, 6, kCorrectedS1), std::invalid_argument);
    }
}

TEST_CASE("build_s2 for d=3 corrected-s1 matches the hand enumeration") {
    const S2 s2 = build_s2(3, kCorrectedS1);
    CHECK(s2.uncovered.empty());
    REQUIRE(s2.entries.size() == 8);

    const std::vector<std::pair<Node, int>> expected_mids = {
        {{1, 1}, 2}, {{1, 2}, 2}, {{1, 3}, 2}, {{2, 1}, 2},
        {{2, 2}, 3}, {{2, 3}, 2}, {{3, 1}, 2}, {{3, 2}, 2},
    };
    for (std::size_t k = 0; k < expected_mids.size(); ++k) {
        CHECK(s2.entries[k].target == expected_mids[k].first);
        CHECK(s2.entries[k].mid == expected_mids[k].second);
    }
    CHECK(entry_for(s2, Node{2, 2})->endpoints == Edge(Node{2, 3}, Node{3, 2}));
}

TEST_CASE("build_s2 restores the two corner entries at d=6") {
    const S2 s2 = build_s2(6, kCorrectedS1);
    const S2Entry* a = entry_for(s2, Node{6, 5});
    const S2Entry* b = entry_for(s2, Node{5, 6});
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(a->endpoints == Edge(Node{6, 5}, Node{5, 5}));
    CHECK(b->endpoints == Edge(Node{5, 5}, Node{5, 6}));
}

TEST_CASE("build_s2 edge cases") {
    SUBCASE("d=1 yields nothing for every variant") {
        for (const VariantConfig& variant : {kOriginal, kCorrectedS1, kAlternativeS2}) {
            const S2 s2 = build_s2(1, variant);
            CHECK(s2.entries.empty());
            CHECK(s2.uncovered.empty());
        }
    }
    SUBCASE("d=3 original drops exactly the two targets next to the corner") {
        const S2 s2 = build_s2(3, kOriginal);
        CHECK(s2.uncovered == std::vector<Node>{{2, 3}, {3, 2}});
    }
}

TEST_CASE("build_s2 coverage properties over a d sweep") {
    for (int d = 1; d <= 40; ++d) {
        CAPTURE(d);
        const S2 corrected = build_s2(d, kCorrectedS1);
        CHECK(corrected.uncovered.empty());
        CHECK(static_cast<int>(corrected.entries.size()) == d * d - 1);

        if (d >= 2) {
            const S2 original = build_s2(d, kOriginal);
            CHECK(original.uncovered == std::vector<Node>{{d - 1, d}, {d, d - 1}});
        }

        const S2 alternative = build_s2(d, kAlternativeS2);
        CHECK(alternative.uncovered.empty());
        CHECK(static_cast<int>(alternative.entries.size()) == d * d - 1);

        // entries are canonically ordered and each target appears at most once
        for (const VariantConfig& variant : {kOriginal, kCorrectedS1, kAlternativeS2}) {
            const S2 s2 = build_s2(d, variant);
            for (std::size_t k = 1; k < s2.entries.size(); ++k) {
                CHECK(s2.entries[k - 1].target < s2.entries[k].target);
            }
        }
    }
}

TEST_CASE("distinct targets map to distinct edges (corrected-s1, d <= 64)") {
    for (int d = 1; d <= 64; ++d) {
        const S2 s2 = build_s2(d, kCorrectedS1);
        std::set<Edge> edges;
        for (const S2Entry& e : s2.entries) edges.insert(e.endpoints);
        CHECK(edges.size() == s2.entries.size());
    }
}

TEST_CASE("build_gamma3 merges duplicate edges and keeps isolated vertices") {
    SUBCASE("d=6 corrected-s1: 35 vertices, 35 edges, one target each") {
        const S2 s2 = build_s2(6, kCorrectedS1);
        const Gamma3 g = build_gamma3(s2.entries, index_sets(6, kCorrectedS1).I);
        CHECK(g.vertices.size() == 35);
        CHECK(g.edges.size() == 35);
        for (const EdgeRecord& e : g.edges) CHECK(e.targets.size() == 1);
    }
    SUBCASE("empty entries over the d=1 vertex set give the empty graph") {
        const Gamma3 g = build_gamma3({}, index_sets(1, kCorrectedS1).I);
        CHECK(g.vertices.empty());
        CHECK(g.edges.empty());
    }
    SUBCASE("d=3: 8 edges, and (2,2) has whole-graph degree 4") {
        const S2 s2 = build_s2(3, kCorrectedS1);
        const Gamma3 g = build_gamma3(s2.entries, index_sets(3, kCorrectedS1).I);
        CHECK(g.edges.size() == 8);
        std::vector<Node> neighbors;
        for (const EdgeRecord& e : g.edges) {
            if (e.edge.touches(Node{2, 2})) neighbors.push_back(e.edge.other(Node{2, 2}));
        }
        std::sort(neighbors.begin(), neighbors.end());
        CHECK(neighbors == std::vector<Node>{{1, 2}, {2, 1}, {2, 3}, {3, 2}});
    }
    SUBCASE("an entry with an endpoint outside the vertex set is rejected") {
        S2Entry bad;
        bad.target = Node{1, 2};
        bad.mid = 7;
        bad.endpoints = Edge(Node{1, 7}, Node{7, 2});
        CHECK_THROWS_AS(build_gamma3(std::vector<S2Entry>{bad}, index_sets(6, kCorrectedS1).I),
                        std::invalid_argument);
    }
    SUBCASE("two entries sharing an edge merge into one record") {
        std::vector<S2Entry> entries(2);
        entries[0].target = Node{1, 2};
        entries[0].mid = 2;
        entries[0].endpoints = Edge(Node{1, 2}, Node{2, 2});
        entries[1].target = Node{2, 1};
        entries[1].mid = 2;
        entries[1].endpoints = Edge(Node{2, 2}, Node{1, 2});
        const Gamma3 g = build_gamma3(entries, index_sets(3, kCorrectedS1).I);
        REQUIRE(g.edges.size() == 1);
        CHECK(g.edges[0].targets == std::vector<Node>{{1, 2}, {2, 1}});
    }
}

TEST_CASE("base weight evaluation") {
    SUBCASE("(3,1): diff 2") {
        const WeightTriple t = base_weight(Node{3, 1});
        CHECK(t.w[2] == 125);
        CHECK(t.w[1] == 75);
        CHECK(t.w[0] == 0);
    }
    SUBCASE("(1,2): diff -1") {
        const WeightTriple t = base_weight(Node{1, 2});
        CHECK(t.w[2] == 25);
        CHECK(t.w[0] == 15);
        CHECK(t.w[1] == 0);
    }
    SUBCASE("diagonal nodes") {
        for (int i = 1; i <= 9; ++i) {
            const WeightTriple t = base_weight(Node{i, i});
            CHECK(t.w[0] == 5);
            CHECK(t.w[2] == 3);
            CHECK(t.w[1] == 0);
        }
    }
    SUBCASE("support is one zero, 5^{k+1} and 3*5^k, for any node") {
        for (int i = 1; i <= 12; ++i) {
            for (int j = 1; j <= 12; ++j) {
                const WeightTriple t = base_weight(Node{i, j});
                const unsigned k = static_cast<unsigned>(std::abs(i - j));
                int zeros = 0;
                bool has_main = false;
                bool has_second = false;
                for (int m = 0; m < 3; ++m) {
                    if (t.w[m] == 0) ++zeros;
                    if (t.w[m] == pow5(k + 1)) has_main = true;
                    if (t.w[m] == 3 * pow5(k)) has_second = true;
                }
                CHECK(zeros == 1);
                CHECK(has_main);
                CHECK(has_second);
            }
        }
    }
}

TEST_CASE("weight tables") {
    SUBCASE("corrected-s1 overrides exactly three nodes, for every d >= 2") {
        for (int d = 2; d <= 40; ++d) {
            CAPTURE(d);
            const WeightTable table = weights(d, kCorrectedS1);
            std::vector<Node> deviating;
            for (const auto& [node, triple] : table) {
                if (!(triple == base_weight(node))) deviating.push_back(node);
            }
            CHECK(deviating ==
                  std::vector<Node>{{d - 1, d - 1}, {d - 1, d}, {d, d - 1}});
        }
    }
    SUBCASE("the d=6 override values") {
        const WeightTable table = weights(6, kCorrectedS1);
        CHECK(table.at(Node{5, 5}) == WeightTriple{{Weight(15), Weight(0), Weight(15)}});
        CHECK(table.at(Node{5, 6}) == WeightTriple{{Weight(25), Weight(0), Weight(20)}});
        CHECK(table.at(Node{6, 5}) == WeightTriple{{Weight(3), Weight(25), Weight(0)}});
        CHECK(table.at(Node{3, 1}) == base_weight(Node{3, 1}));
    }
    SUBCASE("alternative-s2 never deviates from the base formula") {
        for (int d = 1; d <= 20; ++d) {
            const WeightTable table = weights(d, kAlternativeS2);
            for (const auto& [node, triple] : table) {
                CHECK(triple == base_weight(node));
            }
        }
        CHECK(weights(6, kAlternativeS2).at(Node{6, 5}) ==
              WeightTriple{{Weight(15), Weight(25), Weight(0)}});
    }
    SUBCASE("tables are total on I") {
        for (int d = 1; d <= 12; ++d) {
            for (const VariantConfig& variant : {kOriginal, kCorrectedS1, kAlternativeS2}) {
                const WeightTable table = weights(d, variant);
                const IndexSets sets = index_sets(d, variant);
                CHECK(table.size() == sets.I.size());
                for (const Node& n : sets.I) CHECK(table.contains(n));
            }
        }
    }
}

TEST_CASE("edge coloring rules") {
    const WeightTable w6 = weights(6, kCorrectedS1);

    SUBCASE("target-diff uses (i - l) mod 3 of the target") {
        EdgeRecord e{Edge(Node{6, 5}, Node{5, 5}), {Node{6, 5}}};
        CHECK(color_of_edge(e, ColoringRule::target_diff(), w6) == 0b010);  // m=1, blue
        EdgeRecord diag{Edge(Node{2, 3}, Node{3, 2}), {Node{2, 2}}};
        CHECK(color_of_edge(diag, ColoringRule::target_diff(), w6) == 0b001);  // m=0, red
    }
    SUBCASE("target-diff without a target is a contract violation") {
        EdgeRecord e{Edge(Node{6, 5}, Node{5, 5}), {}};
        CHECK_THROWS_AS(color_of_edge(e, ColoringRule::target_diff(), w6),
                        std::invalid_argument);
    }
    SUBCASE("multi-target edges take the union of target residues") {
        EdgeRecord e{Edge(Node{1, 2}, Node{2, 2}), {Node{1, 2}, Node{2, 1}}};
        CHECK(color_of_edge(e, ColoringRule::target_diff(), w6) == 0b110);  // m=2 and m=1
    }
    SUBCASE("shared-support intersects endpoint supports") {
        EdgeRecord e{Edge(Node{5, 5}, Node{5, 4}), {Node{5, 4}}};
        // overridden (5,5) supports {0,2}; base (5,4) supports {0,1}
        CHECK(color_of_edge(e, ColoringRule::shared_support(), w6) == 0b001);
    }
    SUBCASE("endpoint-diff keys on the lexicographically smaller endpoint") {
        EdgeRecord e{Edge(Node{3, 1}, Node{2, 1}), {Node{3, 1}}};
        // smaller endpoint (2,1): (2-1) mod 3 = 1
        CHECK(color_of_edge(e, ColoringRule::endpoint_diff(), w6) == 0b010);
    }
    SUBCASE("custom rules remap basis residues") {
        ColoringRule rule;
        rule.kind = RuleKind::Custom;
        rule.name = "swap-green-blue";
        rule.basis = RuleKind::TargetDiff;
        rule.residue_colors = {0b001, 0b100, 0b010};  // 0->0, 1->2, 2->1
        EdgeRecord e{Edge(Node{6, 5}, Node{5, 5}), {Node{6, 5}}};  // residue 1
        CHECK(color_of_edge(e, rule, w6) == 0b100);
    }
}

TEST_CASE("scaling weights preserves supports and shared-support colors") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> factor_dist(1, 1000);
    for (int d : {2, 3, 6, 11}) {
        const VariantConfig variant = kCorrectedS1;
        const WeightTable w = weights(d, variant);
        const Weight factor = factor_dist(rng);
        const WeightTable scaled_w = scaled(w, factor);
        for (const auto& [node, triple] : w) {
            CHECK(triple.support() == scaled_w.at(node).support());
        }
        const S2 s2 = build_s2(d, variant);
        const Gamma3 g = build_gamma3(s2.entries, index_sets(d, variant).I);
        for (const EdgeRecord& e : g.edges) {
            CHECK(color_of_edge(e, ColoringRule::shared_support(), w) ==
                  color_of_edge(e, ColoringRule::shared_support(), scaled_w));
        }
    }
}
