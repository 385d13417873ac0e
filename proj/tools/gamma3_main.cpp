#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gamma3/io.hpp"
#include "gamma3/render.hpp"
#include "gamma3/verify.hpp"
#include "gamma3/version.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;
constexpr int kIoFailure = 3;

struct CommonOptions {
    int d = 0;
    std::string d_range;
    std::string variant = "corrected-s1";
    std::string alt_mid_rule = "uniform-ceil";
    std::string rule = "target-diff";
    std::string rule_file;
    std::string format = "dot";
    std::string input;
    std::string output = "-";
    int workers = 0;
};

gamma3::VariantConfig variant_of(const CommonOptions& opts) {
    gamma3::VariantConfig config;
    config.kind = *gamma3::parse_variant(opts.variant);
    config.alt_mid_rule = *gamma3::parse_alt_mid_rule(opts.alt_mid_rule);
    return config;
}

gamma3::VariantConfig variant_of_name(const std::string& name) {
    gamma3::VariantConfig config;
    config.kind = *gamma3::parse_variant(name);
    return config;
}

gamma3::ColoringRule rule_of(const CommonOptions& opts) {
    if (!opts.rule_file.empty()) {
        const std::string text = gamma3::read_text_file(opts.rule_file);
        nlohmann::ordered_json j;
        try {
            j = nlohmann::ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw gamma3::IoError(opts.rule_file + ": " + e.what());
        }
        return gamma3::rule_from_json(j);
    }
    return *gamma3::parse_rule(opts.rule);
}

std::optional<std::pair<int, int>> parse_d_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        std::size_t used = 0;
        if (sep == std::string::npos) {
            const int d = std::stoi(text, &used);
            if (used != text.size()) return std::nullopt;
            return std::pair{d, d};
        }
        const std::string lo_text = text.substr(0, sep);
        const std::string hi_text = text.substr(sep + 2);
        const int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size()) return std::nullopt;
        const int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size()) return std::nullopt;
        return std::pair{lo, hi};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int workers_of(const CommonOptions& opts) {
    if (opts.workers > 0) return opts.workers;
    if (const char* env = std::getenv("GAMMA3_WORKERS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
        std::cerr << "gamma3: ignoring non-positive GAMMA3_WORKERS=\"" << env << "\"\n";
    }
    return 0;
}

void emit_document(const CommonOptions& opts, const std::string& text) {
    if (opts.output == "-") {
        std::cout << text;
        return;
    }
    gamma3::write_text_atomic(opts.output, text);
}

void add_variant_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--variant", opts.variant, "construction variant")
        ->check(CLI::IsMember({"original", "corrected-s1", "alternative-s2"}));
    cmd->add_option("--alt-mid-rule", opts.alt_mid_rule,
                    "midpoint rule for alternative-s2")
        ->check(CLI::IsMember({"uniform-ceil", "keep-floor"}));
}

void add_rule_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--rule", opts.rule, "edge coloring rule")
        ->check(CLI::IsMember({"target-diff", "shared-support", "endpoint-diff"}));
    cmd->add_option("--rule-file", opts.rule_file, "custom coloring rule document")
        ->excludes("--rule");
}

int run_verify_like(const gamma3::Certificate& cert, const CommonOptions& opts) {
    emit_document(opts, gamma3::json_text(gamma3::certificate_to_json(cert)));
    if (!cert.overall_pass) {
        const gamma3::FirstFailure& f = *cert.first_failure;
        std::cerr << "gamma3: FALSIFIED at d=" << f.d << " (" << f.kind << "): " << f.detail
                  << "\n";
        return kFalsified;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructor, verifier and renderer for the S2/Gamma3/omega3 family"};
    app.set_version_flag("--version", gamma3::kToolVersion);
    app.require_subcommand(1);

    CommonOptions opts;
    std::string diff_from = "original";
    std::string diff_to = "corrected-s1";

    CLI::App* build = app.add_subcommand("build", "build the graph document for one d");
    build->add_option("--d", opts.d, "dimension")->required()->check(CLI::PositiveNumber);
    add_variant_flags(build, opts);
    add_rule_flags(build, opts);
    build->add_option("-o,--output", opts.output, "output path ('-' = stdout)");

    CLI::App* verify = app.add_subcommand("verify", "verify one dimension");
    verify->add_option("--d", opts.d, "dimension")->required()->check(CLI::PositiveNumber);
    add_variant_flags(verify, opts);
    add_rule_flags(verify, opts);
    verify->add_option("-o,--output", opts.output, "certificate path ('-' = stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "verify a whole d range");
    sweep->add_option("--d-range", opts.d_range, "inclusive range LO..HI (or single d)")
        ->required();
    add_variant_flags(sweep, opts);
    add_rule_flags(sweep, opts);
    sweep->add_option("--workers", opts.workers, "parallel worker count")
        ->check(CLI::PositiveNumber);
    sweep->add_option("-o,--output", opts.output, "certificate path ('-' = stdout)");

    CLI::App* diff = app.add_subcommand("diff", "diff the S2 entries of two variants");
    diff->add_option("--d", opts.d, "dimension")->required()->check(CLI::PositiveNumber);
    diff->add_option("--from", diff_from, "base variant")
        ->check(CLI::IsMember({"original", "corrected-s1", "alternative-s2"}));
    diff->add_option("--to", diff_to, "target variant")
        ->check(CLI::IsMember({"original", "corrected-s1", "alternative-s2"}));
    diff->add_option("-o,--output", opts.output, "output path ('-' = stdout)");

    CLI::App* explore = app.add_subcommand("explore-rules",
                                           "sweep every built-in coloring rule");
    explore->add_option("--d-range", opts.d_range, "inclusive range LO..HI (or single d)")
        ->required();
    add_variant_flags(explore, opts);
    explore->add_option("--workers", opts.workers, "parallel worker count")
        ->check(CLI::PositiveNumber);
    explore->add_option("-o,--output", opts.output, "output path ('-' = stdout)");

    CLI::App* render = app.add_subcommand("render", "emit a figure document");
    render->add_option("--d", opts.d, "dimension")->check(CLI::PositiveNumber);
    add_variant_flags(render, opts);
    add_rule_flags(render, opts);
    render->add_option("--format", opts.format, "dot, tikz or svg")
        ->check(CLI::IsMember({"dot", "tikz", "svg"}));
    render->add_option("--input", opts.input, "render a stored graph document")
        ->excludes("--d");
    render->add_option("-o,--output", opts.output, "output path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (build->parsed()) {
            const auto doc = gamma3::build_graph_document(opts.d, variant_of(opts), rule_of(opts));
            emit_document(opts, gamma3::json_text(gamma3::graph_to_json(doc)));
            return kOk;
        }

        if (verify->parsed()) {
            return run_verify_like(gamma3::sweep_serial(opts.d, opts.d, variant_of(opts),
                                                        rule_of(opts)),
                                   opts);
        }

        if (sweep->parsed()) {
            const auto range = parse_d_range(opts.d_range);
            if (!range || range->first < 1 || range->second < range->first) {
                std::cerr << "gamma3: invalid --d-range \"" << opts.d_range
                          << "\" (want LO..HI with 1 <= LO <= HI)\n";
                return kUsage;
            }
            gamma3::SweepOptions sweep_opts{workers_of(opts)};
            return run_verify_like(gamma3::sweep(range->first, range->second, variant_of(opts),
                                                 rule_of(opts), sweep_opts),
                                   opts);
        }

        if (diff->parsed()) {
            const auto from = variant_of_name(diff_from);
            const auto to = variant_of_name(diff_to);
            const auto d = gamma3::diff_variants(opts.d, from, to);
            emit_document(opts, gamma3::json_text(gamma3::diff_to_json(opts.d, from, to, d)));
            return kOk;
        }

        if (explore->parsed()) {
            const auto range = parse_d_range(opts.d_range);
            if (!range || range->first < 1 || range->second < range->first) {
                std::cerr << "gamma3: invalid --d-range \"" << opts.d_range
                          << "\" (want LO..HI with 1 <= LO <= HI)\n";
                return kUsage;
            }
            gamma3::SweepOptions sweep_opts{workers_of(opts)};
            const auto exploration = gamma3::rule_exploration(range->first, range->second,
                                                              variant_of(opts), sweep_opts);
            emit_document(opts, gamma3::json_text(gamma3::exploration_to_json(exploration)));
            return kOk;
        }

        if (render->parsed()) {
            const auto format = gamma3::parse_figure_format(opts.format);
            if (!format) {
                std::cerr << "gamma3: unsupported format \"" << opts.format << "\"\n";
                return kUsage;
            }
            if (!opts.input.empty()) {
                nlohmann::ordered_json j;
                try {
                    j = nlohmann::ordered_json::parse(gamma3::read_text_file(opts.input));
                } catch (const nlohmann::json::parse_error& e) {
                    throw gamma3::IoError(opts.input + ": " + e.what());
                }
                const auto doc = gamma3::graph_from_json(j);
                emit_document(opts, gamma3::emit_figure(doc.graph, doc.weights, doc.d,
                                                        doc.variant, doc.rule, *format));
                return kOk;
            }
            if (opts.d < 1) {
                std::cerr << "gamma3: render needs --d or --input\n";
                return kUsage;
            }
            emit_document(opts, gamma3::emit_figure(opts.d, variant_of(opts), rule_of(opts),
                                                    *format));
            return kOk;
        }
    } catch (const gamma3::ResourceError& e) {
        std::cerr << "gamma3: resource exhaustion: " << e.what() << "\n";
        return kIoFailure;
    } catch (const gamma3::IoError& e) {
        std::cerr << "gamma3: " << e.what() << "\n";
        return kIoFailure;
    } catch (const std::exception& e) {
        std::cerr << "gamma3: " << e.what() << "\n";
        return kIoFailure;
    }
    return kUsage;
}
