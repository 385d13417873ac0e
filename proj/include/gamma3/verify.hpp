#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamma3/construct.hpp"

namespace gamma3 {

struct DegreeWitness {
    Node node;
    int degree = 0;

    friend bool operator==(const DegreeWitness&, const DegreeWitness&) = default;
};

struct ColorSubgraphReport {
    int color = 0;
    int edge_count = 0;
    bool is_forest = true;
    int max_degree = 0;
    int components = 0;  // touched vertices only; isolated vertices do not count
    std::optional<std::vector<Edge>> cycle_witness;   // closed walk of distinct edges
    std::optional<DegreeWitness> degree_witness;      // present iff max_degree > 3

    friend bool operator==(const ColorSubgraphReport&, const ColorSubgraphReport&) = default;
};

struct VerificationReport {
    int d = 0;
    VariantConfig variant;
    std::string rule;
    std::vector<Node> coverage_uncovered;
    std::array<ColorSubgraphReport, 3> per_color;
    int vertex_count = 0;
    int edge_count = 0;
    bool pass = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct ForestCheck {
    bool is_forest = true;
    std::optional<std::vector<Edge>> cycle;
};

// Edges of g whose rule color set contains m, canonical order.
std::vector<Edge> color_subgraph(const Gamma3& g, const ColoringRule& rule, const WeightTable& w,
                                 int m);

// Disjoint-set acyclicity check; on failure the witness is a concrete cycle.
ForestCheck is_forest(std::span<const Node> vertices, std::span<const Edge> edges);

// Full pipeline for one dimension: build S2, Gamma3, weights, then color and check.
VerificationReport verify_construction(int d, const VariantConfig& variant,
                                       const ColoringRule& rule);

// Same checks against an externally supplied graph/table (e.g. scaled weights).
VerificationReport verify_graph(int d, const VariantConfig& variant, const ColoringRule& rule,
                                const Gamma3& g, const WeightTable& w,
                                std::span<const Node> uncovered);

struct VariantDiff {
    std::vector<S2Entry> added;    // present under `to`, absent under `from`
    std::vector<S2Entry> removed;  // present under `from`, absent under `to`
};

VariantDiff diff_variants(int d, const VariantConfig& from, const VariantConfig& to);

struct FirstFailure {
    int d = 0;
    std::string kind;    // "coverage", "cycle" or "degree"
    std::string detail;  // human-readable witness

    friend bool operator==(const FirstFailure&, const FirstFailure&) = default;
};

struct Certificate {
    int d_lo = 0;
    int d_hi = 0;
    VariantConfig variant;
    std::string rule;
    std::vector<VerificationReport> reports;  // ascending d
    bool overall_pass = false;
    std::optional<FirstFailure> first_failure;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Sweep resource limits are reported distinctly from property failures.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepOptions {
    int workers = 0;  // 0 = all available
};

// Serial reference sweep; the parallel kernel must reproduce it byte for byte.
Certificate sweep_serial(int d_lo, int d_hi, const VariantConfig& variant,
                         const ColoringRule& rule);

// OpenMP kernel over d; deterministic ordered aggregation.
Certificate sweep(int d_lo, int d_hi, const VariantConfig& variant, const ColoringRule& rule,
                  const SweepOptions& options = {});

// Derives a coverage/cycle/degree witness summary from a failing report.
std::optional<FirstFailure> failure_of(const VerificationReport& report);

struct RuleOutcome {
    ColoringRule rule;
    Certificate certificate;
};

struct RuleExploration {
    int d_lo = 0;
    int d_hi = 0;
    VariantConfig variant;
    std::vector<RuleOutcome> outcomes;  // one per built-in rule
};

// Sweeps every built-in rule over the range; supports auditing the edge-color
// convention, which the construction itself leaves open.
RuleExploration rule_exploration(int d_lo, int d_hi, const VariantConfig& variant,
                                 const SweepOptions& options = {});

namespace detail {
Certificate assemble_certificate(int d_lo, int d_hi, const VariantConfig& variant,
                                 const ColoringRule& rule,
                                 std::vector<VerificationReport> reports);
void require_range(int d_lo, int d_hi);
}  // namespace detail

}  // namespace gamma3
