#include "gamma3/io.hpp"

#include <fstream>
#include <unistd.h>

#include "gamma3/version.hpp"

namespace gamma3 {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw IoError(where + ": " + what);
}

const ordered_json& member(const ordered_json& j, const std::string& where, const char* key) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int int_member(const ordered_json& j, const std::string& where, const char* key) {
    const ordered_json& v = member(j, where, key);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<int>();
}

std::string string_member(const ordered_json& j, const std::string& where, const char* key) {
    const ordered_json& v = member(j, where, key);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

void check_schema(const ordered_json& j, const std::string& where, const char* expected_kind,
                  int expected_version) {
    const int version = int_member(j, where, "schema_version");
    if (version != expected_version) {
        fail(where, "unsupported version " + std::to_string(version) + " (expected schema_version " +
                        std::to_string(expected_version) + ")");
    }
    const std::string kind = string_member(j, where, "kind");
    if (kind != expected_kind) {
        fail(where + ".kind", "expected \"" + std::string(expected_kind) + "\", got \"" + kind +
                                  "\"");
    }
}

ordered_json node_to_json(const Node& n) {
    return ordered_json::array({n.i, n.j});
}

Node node_from_json(const ordered_json& j, const std::string& where, int d) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        fail(where, "expected a node as [i,j]");
    }
    const Node n{j[0].get<int>(), j[1].get<int>()};
    if (n.i < 1 || n.i > d || n.j < 1 || n.j > d) {
        fail(where, "node " + to_string(n) + " out of range for d=" + std::to_string(d));
    }
    return n;
}

std::vector<Node> node_list_from_json(const ordered_json& j, const std::string& where, int d) {
    if (!j.is_array()) fail(where, "expected an array of nodes");
    std::vector<Node> nodes;
    nodes.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        nodes.push_back(node_from_json(j[k], where + "[" + std::to_string(k) + "]", d));
    }
    for (std::size_t k = 1; k < nodes.size(); ++k) {
        if (!(nodes[k - 1] < nodes[k])) {
            fail(where + "[" + std::to_string(k) + "]", "nodes must be sorted and distinct");
        }
    }
    return nodes;
}

ordered_json rule_to_json(const ColoringRule& rule) {
    if (rule.kind != RuleKind::Custom) return rule.name;
    ordered_json map = ordered_json::object();
    for (int r = 0; r < 3; ++r) {
        ordered_json colors = ordered_json::array();
        for (int m = 0; m < 3; ++m) {
            if (has_color(rule.residue_colors[static_cast<std::size_t>(r)], m)) colors.push_back(m);
        }
        map[std::to_string(r)] = std::move(colors);
    }
    ordered_json j = ordered_json::object();
    j["name"] = rule.name;
    j["basis"] = rule.basis == RuleKind::TargetDiff ? "target-diff" : "endpoint-diff";
    j["map"] = std::move(map);
    return j;
}

ColoringRule rule_body_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_string()) {
        const auto rule = parse_rule(j.get<std::string>());
        if (!rule) fail(where, "unknown rule \"" + j.get<std::string>() + "\"");
        return *rule;
    }
    ColoringRule rule;
    rule.kind = RuleKind::Custom;
    rule.name = string_member(j, where, "name");
    if (rule.name.empty()) fail(where + ".name", "must not be empty");
    const std::string basis = string_member(j, where, "basis");
    if (basis == "target-diff") {
        rule.basis = RuleKind::TargetDiff;
    } else if (basis == "endpoint-diff") {
        rule.basis = RuleKind::EndpointDiff;
    } else {
        fail(where + ".basis", "expected \"target-diff\" or \"endpoint-diff\"");
    }
    const ordered_json& map = member(j, where, "map");
    for (int r = 0; r < 3; ++r) {
        const std::string key = std::to_string(r);
        const std::string map_where = where + ".map." + key;
        if (!map.contains(key) || !map[key].is_array()) {
            fail(map_where, "expected an array of residues");
        }
        std::uint8_t mask = 0;
        for (const ordered_json& c : map[key]) {
            if (!c.is_number_integer() || c.get<int>() < 0 || c.get<int>() > 2) {
                fail(map_where, "colors must be residues 0..2");
            }
            mask |= static_cast<std::uint8_t>(1u << c.get<int>());
        }
        rule.residue_colors[static_cast<std::size_t>(r)] = mask;
    }
    return rule;
}

}  // namespace

GraphDocument build_graph_document(int d, const VariantConfig& variant, const ColoringRule& rule) {
    GraphDocument doc;
    doc.d = d;
    doc.variant = variant;
    doc.rule = rule;
    S2 s2 = build_s2(d, variant);
    doc.graph = build_gamma3(s2.entries, index_sets(d, variant).I);
    doc.weights = weights(d, variant);
    doc.uncovered = std::move(s2.uncovered);
    return doc;
}

ordered_json graph_to_json(const GraphDocument& doc) {
    ordered_json j = ordered_json::object();
    j["schema_version"] = kGraphSchemaVersion;
    j["kind"] = "gamma3-graph";
    j["tool_version"] = kToolVersion;
    j["d"] = doc.d;
    j["variant"] = variant_name(doc.variant.kind);
    j["alt_mid_rule"] = alt_mid_rule_name(doc.variant.alt_mid_rule);
    j["rule"] = rule_to_json(doc.rule);

    ordered_json vertices = ordered_json::array();
    for (const Node& n : doc.graph.vertices) vertices.push_back(node_to_json(n));
    j["vertices"] = std::move(vertices);

    ordered_json edges = ordered_json::array();
    for (const EdgeRecord& e : doc.graph.edges) {
        ordered_json edge = ordered_json::object();
        edge["u"] = node_to_json(e.edge.u);
        edge["v"] = node_to_json(e.edge.v);
        ordered_json targets = ordered_json::array();
        for (const Node& t : e.targets) targets.push_back(node_to_json(t));
        edge["targets"] = std::move(targets);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);

    ordered_json uncovered = ordered_json::array();
    for (const Node& n : doc.uncovered) uncovered.push_back(node_to_json(n));
    j["uncovered"] = std::move(uncovered);

    ordered_json weight_rows = ordered_json::array();
    for (const auto& [node, triple] : doc.weights) {
        ordered_json row = ordered_json::object();
        row["node"] = node_to_json(node);
        row["w"] = ordered_json::array(
            {triple.w[0].get_str(), triple.w[1].get_str(), triple.w[2].get_str()});
        weight_rows.push_back(std::move(row));
    }
    j["weights"] = std::move(weight_rows);
    return j;
}

GraphDocument graph_from_json(const ordered_json& j) {
    const std::string where = "graph document";
    check_schema(j, where, "gamma3-graph", kGraphSchemaVersion);

    GraphDocument doc;
    doc.d = int_member(j, where, "d");
    if (doc.d < 1) fail(where + ".d", "d must be >= 1");

    const std::string variant = string_member(j, where, "variant");
    const auto kind = parse_variant(variant);
    if (!kind) fail(where + ".variant", "unknown variant \"" + variant + "\"");
    doc.variant.kind = *kind;
    const std::string alt = string_member(j, where, "alt_mid_rule");
    const auto alt_rule = parse_alt_mid_rule(alt);
    if (!alt_rule) fail(where + ".alt_mid_rule", "unknown rule \"" + alt + "\"");
    doc.variant.alt_mid_rule = *alt_rule;

    doc.rule = rule_body_from_json(member(j, where, "rule"), where + ".rule");

    doc.graph.vertices = node_list_from_json(member(j, where, "vertices"), where + ".vertices",
                                             doc.d);
    const auto in_vertices = [&doc](const Node& n) {
        return std::binary_search(doc.graph.vertices.begin(), doc.graph.vertices.end(), n);
    };

    const ordered_json& edges = member(j, where, "edges");
    if (!edges.is_array()) fail(where + ".edges", "expected an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string edge_where = where + ".edges[" + std::to_string(k) + "]";
        EdgeRecord record;
        const Node u = node_from_json(member(edges[k], edge_where, "u"), edge_where + ".u", doc.d);
        const Node v = node_from_json(member(edges[k], edge_where, "v"), edge_where + ".v", doc.d);
        if (!(u < v)) fail(edge_where, "edge endpoints must satisfy u < v");
        if (!in_vertices(u)) fail(edge_where + ".u", "endpoint " + to_string(u) + " not a vertex");
        if (!in_vertices(v)) fail(edge_where + ".v", "endpoint " + to_string(v) + " not a vertex");
        record.edge = Edge(u, v);
        record.targets = node_list_from_json(member(edges[k], edge_where, "targets"),
                                             edge_where + ".targets", doc.d);
        if (record.targets.empty()) fail(edge_where + ".targets", "must not be empty");
        if (!doc.graph.edges.empty() && !(doc.graph.edges.back().edge < record.edge)) {
            fail(edge_where, "edges must be sorted and distinct");
        }
        doc.graph.edges.push_back(std::move(record));
    }

    doc.uncovered = node_list_from_json(member(j, where, "uncovered"), where + ".uncovered",
                                        doc.d);

    const ordered_json& weight_rows = member(j, where, "weights");
    if (!weight_rows.is_array()) fail(where + ".weights", "expected an array");
    for (std::size_t k = 0; k < weight_rows.size(); ++k) {
        const std::string row_where = where + ".weights[" + std::to_string(k) + "]";
        const Node node = node_from_json(member(weight_rows[k], row_where, "node"),
                                         row_where + ".node", doc.d);
        const ordered_json& values = member(weight_rows[k], row_where, "w");
        if (!values.is_array() || values.size() != 3) {
            fail(row_where + ".w", "expected three decimal strings");
        }
        WeightTriple triple;
        for (int m = 0; m < 3; ++m) {
            const std::string value_where = row_where + ".w[" + std::to_string(m) + "]";
            if (!values[m].is_string()) fail(value_where, "expected a decimal string");
            try {
                triple.w[m] = Weight(values[m].get<std::string>(), 10);
            } catch (const std::invalid_argument&) {
                fail(value_where, "not a decimal integer: \"" + values[m].get<std::string>() +
                                      "\"");
            }
            if (triple.w[m] < 0) fail(value_where, "weights must be nonnegative");
        }
        if (!doc.weights.emplace(node, std::move(triple)).second) {
            fail(row_where + ".node", "duplicate weight row for " + to_string(node));
        }
    }
    if (doc.weights.size() != doc.graph.vertices.size()) {
        fail(where + ".weights", "weight table must cover every vertex exactly once");
    }
    for (const Node& n : doc.graph.vertices) {
        if (!doc.weights.contains(n)) {
            fail(where + ".weights", "missing weight triple for vertex " + to_string(n));
        }
    }
    return doc;
}

namespace {

ordered_json color_report_to_json(const ColorSubgraphReport& c) {
    ordered_json j = ordered_json::object();
    j["m"] = c.color;
    j["name"] = color_name(c.color);
    j["edge_count"] = c.edge_count;
    j["is_forest"] = c.is_forest;
    j["max_degree"] = c.max_degree;
    j["components"] = c.components;
    if (c.cycle_witness) {
        ordered_json cycle = ordered_json::array();
        for (const Edge& e : *c.cycle_witness) {
            ordered_json edge = ordered_json::object();
            edge["u"] = node_to_json(e.u);
            edge["v"] = node_to_json(e.v);
            cycle.push_back(std::move(edge));
        }
        j["cycle_witness"] = std::move(cycle);
    } else {
        j["cycle_witness"] = nullptr;
    }
    if (c.degree_witness) {
        ordered_json witness = ordered_json::object();
        witness["node"] = node_to_json(c.degree_witness->node);
        witness["degree"] = c.degree_witness->degree;
        j["degree_witness"] = std::move(witness);
    } else {
        j["degree_witness"] = nullptr;
    }
    return j;
}

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j = ordered_json::object();
    j["d"] = r.d;
    j["pass"] = r.pass;
    j["vertex_count"] = r.vertex_count;
    j["edge_count"] = r.edge_count;
    ordered_json uncovered = ordered_json::array();
    for (const Node& n : r.coverage_uncovered) uncovered.push_back(node_to_json(n));
    j["coverage_uncovered"] = std::move(uncovered);
    ordered_json colors = ordered_json::array();
    for (const ColorSubgraphReport& c : r.per_color) colors.push_back(color_report_to_json(c));
    j["colors"] = std::move(colors);
    return j;
}

ordered_json failure_to_json(const std::optional<FirstFailure>& failure) {
    if (!failure) return nullptr;
    ordered_json j = ordered_json::object();
    j["d"] = failure->d;
    j["kind"] = failure->kind;
    j["detail"] = failure->detail;
    return j;
}

}  // namespace

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j = ordered_json::object();
    j["schema_version"] = kCertificateSchemaVersion;
    j["kind"] = "gamma3-certificate";
    j["tool_version"] = kToolVersion;
    j["d_range"] = ordered_json::array({cert.d_lo, cert.d_hi});
    j["variant"] = variant_name(cert.variant.kind);
    j["alt_mid_rule"] = alt_mid_rule_name(cert.variant.alt_mid_rule);
    j["rule"] = cert.rule;
    j["overall_pass"] = cert.overall_pass;
    j["first_failure"] = failure_to_json(cert.first_failure);
    ordered_json reports = ordered_json::array();
    for (const VerificationReport& r : cert.reports) reports.push_back(report_to_json(r));
    j["reports"] = std::move(reports);
    return j;
}

ordered_json diff_to_json(int d, const VariantConfig& from, const VariantConfig& to,
                          const VariantDiff& diff) {
    const auto entry_to_json = [](const S2Entry& e) {
        ordered_json j = ordered_json::object();
        j["target"] = node_to_json(e.target);
        j["mid"] = e.mid;
        j["endpoints"] = ordered_json::array({node_to_json(e.endpoints.u),
                                              node_to_json(e.endpoints.v)});
        return j;
    };
    ordered_json j = ordered_json::object();
    j["schema_version"] = kCertificateSchemaVersion;
    j["kind"] = "gamma3-diff";
    j["tool_version"] = kToolVersion;
    j["d"] = d;
    j["from"] = variant_name(from.kind);
    j["to"] = variant_name(to.kind);
    ordered_json added = ordered_json::array();
    for (const S2Entry& e : diff.added) added.push_back(entry_to_json(e));
    j["added"] = std::move(added);
    ordered_json removed = ordered_json::array();
    for (const S2Entry& e : diff.removed) removed.push_back(entry_to_json(e));
    j["removed"] = std::move(removed);
    return j;
}

ordered_json exploration_to_json(const RuleExploration& exploration) {
    ordered_json j = ordered_json::object();
    j["schema_version"] = kCertificateSchemaVersion;
    j["kind"] = "gamma3-rule-exploration";
    j["tool_version"] = kToolVersion;
    j["d_range"] = ordered_json::array({exploration.d_lo, exploration.d_hi});
    j["variant"] = variant_name(exploration.variant.kind);
    j["alt_mid_rule"] = alt_mid_rule_name(exploration.variant.alt_mid_rule);
    ordered_json rules = ordered_json::array();
    for (const RuleOutcome& outcome : exploration.outcomes) {
        ordered_json r = ordered_json::object();
        r["rule"] = outcome.rule.name;
        r["overall_pass"] = outcome.certificate.overall_pass;
        ordered_json failures = ordered_json::array();
        for (const VerificationReport& report : outcome.certificate.reports) {
            if (report.pass) continue;
            failures.push_back(failure_to_json(failure_of(report)));
        }
        r["failing_d_count"] = failures.size();
        r["failures"] = std::move(failures);
        rules.push_back(std::move(r));
    }
    j["rules"] = std::move(rules);
    return j;
}

ColoringRule rule_from_json(const ordered_json& j) {
    const std::string where = "rule document";
    check_schema(j, where, "gamma3-coloring-rule", kRuleSchemaVersion);
    ordered_json body = j;
    body.erase("schema_version");
    body.erase("kind");
    return rule_body_from_json(body, where);
}

std::string json_text(const ordered_json& j) {
    return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read error on " + path.string());
    return text;
}

void write_text_atomic(const std::filesystem::path& path, std::string_view text) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("write error on " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

}  // namespace gamma3
