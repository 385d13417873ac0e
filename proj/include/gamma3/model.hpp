#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gamma3 {

// Vertex of the grid L x L, L = {1,...,d}. Coordinates are 1-based.
struct Node {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Node&, const Node&) = default;
};

std::string to_string(const Node& n);

enum class Variant {
    OriginalErroneous,  // flawed ceil-everywhere rule, I = LxL \ {(d,d)}
    CorrectedS1,        // floor exception at {i,l} = {d-1,d}, I = LxL \ {(d,d)}
    AlternativeS2,      // I = LxL \ {(1,1)}, J unchanged
};

// The alternative construction never states which midpoint rule survives;
// both readings are kept selectable.
enum class AltMidRule {
    UniformCeil,
    KeepFloorException,
};

struct VariantConfig {
    Variant kind = Variant::CorrectedS1;
    AltMidRule alt_mid_rule = AltMidRule::UniformCeil;  // used by AlternativeS2 only

    friend bool operator==(const VariantConfig&, const VariantConfig&) = default;

    // The one element of LxL absent from I.
    Node excluded_corner(int d) const;
};

inline constexpr VariantConfig kOriginal{Variant::OriginalErroneous};
inline constexpr VariantConfig kCorrectedS1{Variant::CorrectedS1};
inline constexpr VariantConfig kAlternativeS2{Variant::AlternativeS2, AltMidRule::UniformCeil};
inline constexpr VariantConfig kAlternativeS2KeepFloor{Variant::AlternativeS2,
                                                       AltMidRule::KeepFloorException};

std::string variant_name(Variant v);
std::string alt_mid_rule_name(AltMidRule r);
std::optional<Variant> parse_variant(std::string_view name);
std::optional<AltMidRule> parse_alt_mid_rule(std::string_view name);

// Colors are residues m in Z/3. Display convention: m=0 red, m=1 blue, m=2 green.
int color_residue(int x);
const char* color_name(int m);

// Exact nonnegative weights; values are of the form c*5^k but stored as plain integers.
using Weight = mpz_class;

Weight pow5(unsigned exponent);

struct WeightTriple {
    std::array<Weight, 3> w{};  // indexed by m

    bool operator==(const WeightTriple&) const = default;

    // Bit m set iff w[m] != 0.
    std::uint8_t support() const;
};

struct IndexSets {
    std::vector<Node> I;  // vertex set of Gamma3, lexicographic order
    std::vector<Node> J;  // target set, lexicographic order
};

// I and J are LxL minus one corner each; which corner I loses depends on the variant.
IndexSets index_sets(int d, const VariantConfig& variant);

// Sign of x + 1/2; never zero, so the i = j tie breaks upward.
int sign_half(int x);

namespace detail {
void require_dim(int d);  // throws std::invalid_argument on d < 1
}

}  // namespace gamma3
