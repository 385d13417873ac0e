#include "gamma3/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace gamma3 {

namespace {

// Disjoint-set forest over vertex indices, path halving + union by size.
class DisjointSet {
  public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false when x and y were already connected.
    bool unite(std::size_t x, std::size_t y) {
        std::size_t rx = find(x);
        std::size_t ry = find(y);
        if (rx == ry) return false;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

// Path between two vertices of a forest, as the edge sequence of the walk.
std::vector<Edge> forest_path(const std::vector<std::vector<std::pair<std::size_t, Edge>>>& adj,
                              std::size_t from, std::size_t to) {
    std::vector<std::optional<std::pair<std::size_t, Edge>>> via(adj.size());
    std::deque<std::size_t> queue{from};
    std::vector<bool> seen(adj.size(), false);
    seen[from] = true;
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        if (at == to) break;
        for (const auto& [next, edge] : adj[at]) {
            if (seen[next]) continue;
            seen[next] = true;
            via[next] = {at, edge};
            queue.push_back(next);
        }
    }
    std::vector<Edge> path;
    for (std::size_t at = to; at != from; at = via[at]->first) {
        path.push_back(via[at]->second);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<Edge> color_subgraph(const Gamma3& g, const ColoringRule& rule, const WeightTable& w,
                                 int m) {
    std::vector<Edge> edges;
    for (const EdgeRecord& e : g.edges) {
        if (has_color(color_of_edge(e, rule, w), color_residue(m))) {
            edges.push_back(e.edge);
        }
    }
    return edges;
}

ForestCheck is_forest(std::span<const Node> vertices, std::span<const Edge> edges) {
    std::map<Node, std::size_t> index;
    for (const Node& n : vertices) index.emplace(n, index.size());

    DisjointSet dsu(index.size());
    std::vector<std::vector<std::pair<std::size_t, Edge>>> adj(index.size());
    for (const Edge& e : edges) {
        const std::size_t u = index.at(e.u);
        const std::size_t v = index.at(e.v);
        if (!dsu.unite(u, v)) {
            // u and v already connected: the accepted edges hold a u..v path,
            // and e closes it into a cycle.
            std::vector<Edge> cycle = forest_path(adj, u, v);
            cycle.push_back(e);
            return ForestCheck{false, std::move(cycle)};
        }
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    return ForestCheck{true, std::nullopt};
}

namespace {

ColorSubgraphReport report_for_color(const Gamma3& g, const std::vector<Edge>& edges, int m) {
    ColorSubgraphReport report;
    report.color = m;
    report.edge_count = static_cast<int>(edges.size());

    ForestCheck check = is_forest(g.vertices, edges);
    report.is_forest = check.is_forest;
    report.cycle_witness = std::move(check.cycle);

    std::map<Node, int> degree;
    for (const Edge& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (const auto& [node, deg] : degree) {
        report.max_degree = std::max(report.max_degree, deg);
    }
    if (report.max_degree > 3) {
        for (const auto& [node, deg] : degree) {
            if (deg == report.max_degree) {
                report.degree_witness = DegreeWitness{node, deg};
                break;
            }
        }
    }

    // Connected components of the touched subgraph.
    std::map<Node, std::size_t> index;
    for (const auto& [node, deg] : degree) index.emplace(node, index.size());
    DisjointSet dsu(index.size());
    for (const Edge& e : edges) dsu.unite(index.at(e.u), index.at(e.v));
    std::vector<bool> is_root(index.size(), false);
    for (std::size_t i = 0; i < index.size(); ++i) is_root[dsu.find(i)] = true;
    report.components = static_cast<int>(std::count(is_root.begin(), is_root.end(), true));

    return report;
}

}  // namespace

VerificationReport verify_graph(int d, const VariantConfig& variant, const ColoringRule& rule,
                                const Gamma3& g, const WeightTable& w,
                                std::span<const Node> uncovered) {
    VerificationReport report;
    report.d = d;
    report.variant = variant;
    report.rule = rule.name;
    report.coverage_uncovered.assign(uncovered.begin(), uncovered.end());
    report.vertex_count = static_cast<int>(g.vertices.size());
    report.edge_count = static_cast<int>(g.edges.size());

    bool pass = report.coverage_uncovered.empty();
    for (int m = 0; m < 3; ++m) {
        report.per_color[static_cast<std::size_t>(m)] =
            report_for_color(g, color_subgraph(g, rule, w, m), m);
        const ColorSubgraphReport& c = report.per_color[static_cast<std::size_t>(m)];
        pass = pass && c.is_forest && c.max_degree <= 3;
    }
    report.pass = pass;
    return report;
}

VerificationReport verify_construction(int d, const VariantConfig& variant,
                                       const ColoringRule& rule) {
    const S2 s2 = build_s2(d, variant);
    const Gamma3 g = build_gamma3(s2.entries, index_sets(d, variant).I);
    const WeightTable w = weights(d, variant);
    return verify_graph(d, variant, rule, g, w, s2.uncovered);
}

VariantDiff diff_variants(int d, const VariantConfig& from, const VariantConfig& to) {
    const S2 a = build_s2(d, from);
    const S2 b = build_s2(d, to);

    std::map<Node, S2Entry> by_target_a;
    for (const S2Entry& e : a.entries) by_target_a.emplace(e.target, e);
    std::map<Node, S2Entry> by_target_b;
    for (const S2Entry& e : b.entries) by_target_b.emplace(e.target, e);

    VariantDiff diff;
    for (const auto& [target, entry] : by_target_b) {
        const auto it = by_target_a.find(target);
        if (it == by_target_a.end() || !(it->second == entry)) diff.added.push_back(entry);
    }
    for (const auto& [target, entry] : by_target_a) {
        const auto it = by_target_b.find(target);
        if (it == by_target_b.end() || !(it->second == entry)) diff.removed.push_back(entry);
    }
    return diff;
}

std::optional<FirstFailure> failure_of(const VerificationReport& report) {
    if (report.pass) return std::nullopt;
    if (!report.coverage_uncovered.empty()) {
        std::string detail = "uncovered targets:";
        for (const Node& n : report.coverage_uncovered) detail += " " + to_string(n);
        return FirstFailure{report.d, "coverage", std::move(detail)};
    }
    for (const ColorSubgraphReport& c : report.per_color) {
        if (c.cycle_witness) {
            std::string detail = std::string(color_name(c.color)) + " (m=" +
                                 std::to_string(c.color) + ") cycle:";
            for (const Edge& e : *c.cycle_witness) detail += " " + to_string(e);
            return FirstFailure{report.d, "cycle", std::move(detail)};
        }
    }
    for (const ColorSubgraphReport& c : report.per_color) {
        if (c.degree_witness) {
            return FirstFailure{report.d, "degree",
                                std::string(color_name(c.color)) + " (m=" +
                                    std::to_string(c.color) + ") degree " +
                                    std::to_string(c.degree_witness->degree) + " at " +
                                    to_string(c.degree_witness->node)};
        }
    }
    return FirstFailure{report.d, "degree", "unclassified failure"};
}

namespace detail {

Certificate assemble_certificate(int d_lo, int d_hi, const VariantConfig& variant,
                                 const ColoringRule& rule,
                                 std::vector<VerificationReport> reports) {
    Certificate cert;
    cert.d_lo = d_lo;
    cert.d_hi = d_hi;
    cert.variant = variant;
    cert.rule = rule.name;
    cert.reports = std::move(reports);
    cert.overall_pass = true;
    for (const VerificationReport& r : cert.reports) {
        if (!r.pass) {
            cert.overall_pass = false;
            if (!cert.first_failure) cert.first_failure = failure_of(r);
        }
    }
    return cert;
}

void require_range(int d_lo, int d_hi) {
    require_dim(d_lo);
    if (d_hi < d_lo) {
        throw std::invalid_argument("empty d range " + std::to_string(d_lo) + ".." +
                                    std::to_string(d_hi));
    }
}

}  // namespace detail

Certificate sweep_serial(int d_lo, int d_hi, const VariantConfig& variant,
                         const ColoringRule& rule) {
    detail::require_range(d_lo, d_hi);
    std::vector<VerificationReport> reports;
    reports.reserve(static_cast<std::size_t>(d_hi - d_lo + 1));
    for (int d = d_lo; d <= d_hi; ++d) {
        reports.push_back(verify_construction(d, variant, rule));
    }
    return detail::assemble_certificate(d_lo, d_hi, variant, rule, std::move(reports));
}

RuleExploration rule_exploration(int d_lo, int d_hi, const VariantConfig& variant,
                                 const SweepOptions& options) {
    RuleExploration exploration;
    exploration.d_lo = d_lo;
    exploration.d_hi = d_hi;
    exploration.variant = variant;
    for (const ColoringRule& rule : {ColoringRule::target_diff(), ColoringRule::shared_support(),
                                     ColoringRule::endpoint_diff()}) {
        exploration.outcomes.push_back(RuleOutcome{rule, sweep(d_lo, d_hi, variant, rule, options)});
    }
    return exploration;
}

}  // namespace gamma3
