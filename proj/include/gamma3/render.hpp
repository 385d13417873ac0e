#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gamma3/verify.hpp"

namespace gamma3 {

enum class FigureFormat { Dot, Tikz, Svg };

std::optional<FigureFormat> parse_figure_format(std::string_view name);
std::string figure_format_name(FigureFormat format);

// Grid layout: node (i,j) sits at (x = j, y = -i). Injective and fixed, so
// re-emission is byte-identical.
struct GridPos {
    int x = 0;
    int y = 0;
};
GridPos layout_position(const Node& n);

// Structural diagram of the construction: one glyph per vertex labeled with
// its weight triple in the fixed label colors (red m=0, green m=2, blue m=1,
// zeros included), one stroke per edge tinted by the rule color. Edges whose
// rule assigns several colors are tinted by the smallest residue; an empty
// color set renders black.
std::string emit_figure(int d, const VariantConfig& variant, const ColoringRule& rule,
                        FigureFormat format);
std::string emit_figure(const Gamma3& g, const WeightTable& w, int d,
                        const VariantConfig& variant, const ColoringRule& rule,
                        FigureFormat format);

struct DiagonalLabel {
    Node node;
    Weight green;  // m=2 value
    Weight blue;   // m=1 value

    friend bool operator==(const DiagonalLabel&, const DiagonalLabel&) = default;
};

// Green/blue label values along the diagonal of I; documents the rendered
// convention (green 3, blue 0 wherever the base formula applies).
std::vector<DiagonalLabel> diagonal_label_audit(int d,
                                                const VariantConfig& variant = kCorrectedS1);

}  // namespace gamma3
