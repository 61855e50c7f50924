// Parity-check matrix builders for three code families over small fields:
//   - linearized: entries x^(2^(b-1)) over points with BCH-shaped bit strings
//   - sd-h3: three heavy rows x, x^2, x^4 over prefix/suffix concatenated
//     points, giving the sector-disk guarantee
//   - vandermonde: consecutive exponents x^b, with the top-degree block
//     folded through kernel vectors of a Frobenius constraint matrix
// Builders validate their own parameter preconditions and name the violated
// condition in the exception message.

#ifndef MRLOCAL_CONSTRUCTION_HPP
#define MRLOCAL_CONSTRUCTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "mrlocal/gf.hpp"
#include "mrlocal/matrix.hpp"

namespace mrlocal {

enum class Construction { Linearized, SdH3, VandermondeGeneral, VandermondeImproved };
enum class Guarantee { MR, SD };

std::string construction_name(Construction c);
Construction construction_from_name(const std::string& name);

/// Parameter or precondition violation; message names the failed condition.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LocalCodeParams {
    uint32_t k = 0;  // data symbols
    uint32_t r = 0;  // group size minus the local parity
    uint32_t h = 0;  // heavy parities
    uint32_t g = 0;  // group count, (k+h)/r
    uint32_t n = 0;  // code length, g*(r+1)

    /// Derives g and n from (k, r, h); throws ParamError on any violated
    /// structural constraint (r >= 2, h >= 1, r | k+h, g >= 2).
    static LocalCodeParams from_krh(uint32_t k, uint32_t r, uint32_t h);
    void validate() const;

    bool operator==(const LocalCodeParams&) const = default;
};

struct NormalizeResult {
    LocalCodeParams params;
    std::vector<std::string> adjustments;  // empty when the request was already valid
};

/// Smallest parameters >= the request that satisfy the chosen construction's
/// preconditions. Adjusts r and k upward only; a request whose group count
/// would be below 2, or whose h violates a congruence condition the
/// construction needs, is rejected rather than reshaped.
NormalizeResult normalize_params(uint32_t k, uint32_t r, uint32_t h, Construction c);

struct LinearizedLayout {
    FieldRef base;                    // the length-n field the point strings draw from
    std::vector<uint32_t> exponents;  // odd exponents of the concatenated blocks
    bool leading_one = false;
};

struct SdH3Layout {
    FieldRef prefix_field;   // GF(2(r+1)^2), holds the 5-independent prefixes
    FieldRef suffix_field;   // GF(n)
    uint32_t t = 0;          // degree of the combined symbol field
    std::vector<FieldElement> prefix_set;    // ordered 5-independent set, one per j
    std::vector<FieldElement> subfield_set;  // the embedded size-(r+1) subfield, one per j
    std::vector<FieldElement> coset_reps;    // one per group
};

struct VandermondeLayout {
    uint32_t subfield_degree = 0;  // degree of the length-n subfield inside the symbol field
    uint32_t t = 0;
    bool improved = false;
    FieldElement basis_gen;                           // alpha
    FMatrix constraint;                               // (g-1) x (h+g-t) Frobenius powers of alpha
    std::vector<std::vector<FieldElement>> kernel;    // h-t+1 canonical null-space vectors
};

using Layout = std::variant<LinearizedLayout, SdH3Layout, VandermondeLayout>;

struct CodeInstance {
    LocalCodeParams params;
    Construction construction = Construction::Linearized;
    Guarantee guarantee = Guarantee::MR;
    FieldRef field;  // field of the parity-check entries
    /// Point grid, g rows of r+1 pairwise distinct elements per row.
    std::vector<std::vector<FieldElement>> points;
    Layout layout;
    FMatrix parity;  // (g+h) x n

    /// Flat column index of position j inside group i (all zero-based).
    uint32_t column(uint32_t group, uint32_t j) const { return group * (params.r + 1) + j; }
};

CodeInstance build_linearized(const LocalCodeParams& p);
CodeInstance build_sd_h3(const LocalCodeParams& p);
CodeInstance build_vandermonde(const LocalCodeParams& p, bool improved);
CodeInstance build(const LocalCodeParams& p, Construction c);

/// Assembles the (g+h) x n matrix: g indicator rows, one per wide column,
/// then h rows of heavy coefficients supplied by `heavy` (group, position,
/// heavy row index, all zero-based).
FMatrix assemble_parity(const LocalCodeParams& p,
                        const std::vector<std::vector<FieldElement>>& points,
                        const FieldRef& field,
                        const std::function<FieldElement(uint32_t, uint32_t, uint32_t)>& heavy);

/// The closed-form field size each construction advertises, for reporting
/// next to the built field's actual size.
uint64_t field_size_formula(const LocalCodeParams& p, Construction c);

/// The exponent split parameter t, or 0 for the linearized family.
uint32_t scheme_t(const LocalCodeParams& p, Construction c);

}  // namespace mrlocal

#endif
