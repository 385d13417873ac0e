#include "gamma3/model.hpp"

#include <stdexcept>

namespace gamma3 {

std::string to_string(const Node& n) {
    return "(" + std::to_string(n.i) + "," + std::to_string(n.j) + ")";
}

Node VariantConfig::excluded_corner(int d) const {
    if (kind == Variant::AlternativeS2) {
        return Node{1, 1};
    }
    return Node{d, d};
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::OriginalErroneous: return "original";
        case Variant::CorrectedS1: return "corrected-s1";
        case Variant::AlternativeS2: return "alternative-s2";
    }
    return "?";
}

std::string alt_mid_rule_name(AltMidRule r) {
    return r == AltMidRule::UniformCeil ? "uniform-ceil" : "keep-floor";
}

std::optional<Variant> parse_variant(std::string_view name) {
    if (name == "original") return Variant::OriginalErroneous;
    if (name == "corrected-s1") return Variant::CorrectedS1;
    if (name == "alternative-s2") return Variant::AlternativeS2;
    return std::nullopt;
}

std::optional<AltMidRule> parse_alt_mid_rule(std::string_view name) {
    if (name == "uniform-ceil") return AltMidRule::UniformCeil;
    if (name == "keep-floor") return AltMidRule::KeepFloorException;
    return std::nullopt;
}

int color_residue(int x) {
    return ((x % 3) + 3) % 3;
}

const char* color_name(int m) {
    switch (color_residue(m)) {
        case 0: return "red";
        case 1: return "blue";
        default: return "green";
    }
}

Weight pow5(unsigned exponent) {
    Weight result;
    mpz_ui_pow_ui(result.get_mpz_t(), 5, exponent);
    return result;
}

std::uint8_t WeightTriple::support() const {
    std::uint8_t mask = 0;
    for (int m = 0; m < 3; ++m) {
        if (w[m] != 0) mask |= static_cast<std::uint8_t>(1u << m);
    }
    return mask;
}

IndexSets index_sets(int d, const VariantConfig& variant) {
    detail::require_dim(d);
    const Node skip_i = variant.excluded_corner(d);
    const Node skip_j = Node{d, d};
    IndexSets sets;
    sets.I.reserve(static_cast<std::size_t>(d) * d - 1);
    sets.J.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            const Node n{i, j};
            if (n != skip_i) sets.I.push_back(n);
            if (n != skip_j) sets.J.push_back(n);
        }
    }
    return sets;
}

int sign_half(int x) {
    return x >= 0 ? 1 : -1;
}

namespace detail {

void require_dim(int d) {
    if (d < 1) {
        throw std::invalid_argument("dimension d must be >= 1, got " + std::to_string(d));
    }
}

}  // namespace detail

}  // namespace gamma3
