#include "gamma3/render.hpp"

#include <algorithm>

namespace gamma3 {

std::optional<FigureFormat> parse_figure_format(std::string_view name) {
    if (name == "dot") return FigureFormat::Dot;
    if (name == "tikz") return FigureFormat::Tikz;
    if (name == "svg") return FigureFormat::Svg;
    return std::nullopt;
}

std::string figure_format_name(FigureFormat format) {
    switch (format) {
        case FigureFormat::Dot: return "dot";
        case FigureFormat::Tikz: return "tikz";
        case FigureFormat::Svg: return "svg";
    }
    return "?";
}

GridPos layout_position(const Node& n) {
    return GridPos{n.j, -n.i};
}

namespace {

const char* stroke_color(std::uint8_t mask) {
    for (int m = 0; m < 3; ++m) {
        if (has_color(mask, m)) return color_name(m);
    }
    return "black";
}

std::string node_id(const Node& n, char sep) {
    return std::string("n") + sep + std::to_string(n.i) + sep + std::to_string(n.j);
}

// Label values in display order red, green, blue.
std::array<std::string, 3> label_values(const WeightTable& w, const Node& n) {
    const WeightTriple& t = w.at(n);
    return {t.w[0].get_str(), t.w[2].get_str(), t.w[1].get_str()};
}

std::string figure_comment(int d, const VariantConfig& variant, const ColoringRule& rule,
                           const Gamma3& g) {
    return "d=" + std::to_string(d) + " variant=" + variant_name(variant.kind) +
           " rule=" + rule.name + " vertices=" + std::to_string(g.vertices.size()) +
           " edges=" + std::to_string(g.edges.size());
}

std::string emit_dot(const Gamma3& g, const WeightTable& w, int d, const VariantConfig& variant,
                     const ColoringRule& rule) {
    std::string out;
    out += "graph gamma3 {\n";
    out += "  // " + figure_comment(d, variant, rule, g) + "\n";
    out += "  graph [layout=neato, splines=line];\n";
    out += "  node [shape=box, fontsize=10];\n";
    for (const Node& n : g.vertices) {
        const GridPos p = layout_position(n);
        const auto [red, green, blue] = label_values(w, n);
        out += "  " + node_id(n, '_') + " [pos=\"" + std::to_string(p.x) + "," +
               std::to_string(p.y) + "!\", label=<<font color=\"red\">" + red +
               "</font>/<font color=\"green\">" + green + "</font>/<font color=\"blue\">" + blue +
               "</font>>];\n";
    }
    for (const EdgeRecord& e : g.edges) {
        out += "  " + node_id(e.edge.u, '_') + " -- " + node_id(e.edge.v, '_') + " [color=" +
               stroke_color(color_of_edge(e, rule, w)) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string tikz_coord(const GridPos& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string emit_tikz(const Gamma3& g, const WeightTable& w, int d, const VariantConfig& variant,
                      const ColoringRule& rule) {
    std::string out;
    out += "% " + figure_comment(d, variant, rule, g) + "\n";
    out += "\\begin{tikzpicture}[x=1.8cm,y=1.8cm,\n";
    out += "    weightnode/.style={draw, rounded corners, inner sep=2pt, font=\\scriptsize}]\n";
    for (const EdgeRecord& e : g.edges) {
        out += "  \\draw[" + std::string(stroke_color(color_of_edge(e, rule, w))) + "] " +
               tikz_coord(layout_position(e.edge.u)) + " -- " +
               tikz_coord(layout_position(e.edge.v)) + ";\n";
    }
    for (const Node& n : g.vertices) {
        const auto [red, green, blue] = label_values(w, n);
        out += "  \\node[weightnode] (" + node_id(n, '-') + ") at " +
               tikz_coord(layout_position(n)) + " {\\textcolor{red}{" + red +
               "}/\\textcolor{green}{" + green + "}/\\textcolor{blue}{" + blue + "}};\n";
    }
    out += "\\end{tikzpicture}\n";
    return out;
}

std::string emit_svg(const Gamma3& g, const WeightTable& w, int d, const VariantConfig& variant,
                     const ColoringRule& rule) {
    constexpr int kCell = 90;
    const int extent = (d + 1) * kCell;
    const auto px = [](const Node& n) { return n.j * kCell; };
    const auto py = [](const Node& n) { return n.i * kCell; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(extent) + "\" height=\"" + std::to_string(extent) + "\" viewBox=\"0 0 " +
           std::to_string(extent) + " " + std::to_string(extent) + "\">\n";
    out += "  <title>" + figure_comment(d, variant, rule, g) + "</title>\n";
    for (const EdgeRecord& e : g.edges) {
        out += "  <line x1=\"" + std::to_string(px(e.edge.u)) + "\" y1=\"" +
               std::to_string(py(e.edge.u)) + "\" x2=\"" + std::to_string(px(e.edge.v)) +
               "\" y2=\"" + std::to_string(py(e.edge.v)) + "\" stroke=\"" +
               stroke_color(color_of_edge(e, rule, w)) + "\" stroke-width=\"2\"/>\n";
    }
    for (const Node& n : g.vertices) {
        const auto [red, green, blue] = label_values(w, n);
        const int text_len = static_cast<int>(red.size() + green.size() + blue.size()) + 2;
        const int box_w = 7 * text_len + 10;
        out += "  <g class=\"node\" transform=\"translate(" + std::to_string(px(n)) + "," +
               std::to_string(py(n)) + ")\">\n";
        out += "    <rect x=\"-" + std::to_string(box_w / 2) + "\" y=\"-11\" width=\"" +
               std::to_string(box_w) + "\" height=\"22\" fill=\"white\" stroke=\"black\"/>\n";
        out += "    <text text-anchor=\"middle\" dominant-baseline=\"middle\" font-size=\"11\">"
               "<tspan fill=\"red\">" + red + "</tspan><tspan dx=\"4\" fill=\"green\">" + green +
               "</tspan><tspan dx=\"4\" fill=\"blue\">" + blue + "</tspan></text>\n";
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string emit_figure(const Gamma3& g, const WeightTable& w, int d,
                        const VariantConfig& variant, const ColoringRule& rule,
                        FigureFormat format) {
    switch (format) {
        case FigureFormat::Dot: return emit_dot(g, w, d, variant, rule);
        case FigureFormat::Tikz: return emit_tikz(g, w, d, variant, rule);
        case FigureFormat::Svg: return emit_svg(g, w, d, variant, rule);
    }
    return {};
}

std::string emit_figure(int d, const VariantConfig& variant, const ColoringRule& rule,
                        FigureFormat format) {
    const S2 s2 = build_s2(d, variant);
    const Gamma3 g = build_gamma3(s2.entries, index_sets(d, variant).I);
    const WeightTable w = weights(d, variant);
    return emit_figure(g, w, d, variant, rule, format);
}

std::vector<DiagonalLabel> diagonal_label_audit(int d, const VariantConfig& variant) {
    const WeightTable w = weights(d, variant);
    std::vector<DiagonalLabel> labels;
    for (int i = 1; i <= d; ++i) {
        const Node n{i, i};
        const auto it = w.find(n);
        if (it == w.end()) continue;  // the excluded corner
        labels.push_back(DiagonalLabel{n, it->second.w[2], it->second.w[1]});
    }
    return labels;
}

}  // namespace gamma3
