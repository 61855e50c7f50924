// Systematic encode / erasure decode against a built instance. Encoding
// places data symbols verbatim and solves the parity positions from the
// constraint H*c = 0; decoding solves the syndrome system restricted to the
// erased columns and refuses patterns whose columns are dependent.

#ifndef MRLOCAL_CODEC_HPP
#define MRLOCAL_CODEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrlocal/construction.hpp"

namespace mrlocal {

struct SymbolLayout {
    std::vector<uint32_t> data_pos;   // k columns
    std::vector<uint32_t> heavy_pos;  // h columns
    std::vector<uint32_t> local_pos;  // g columns, position r (last) of each group
};

/// Local parity sits at the last position of each group; heavy parities take
/// the h highest non-local positions; the rest is data. Throws when the
/// parity-position submatrix of H is singular (encoding unavailable).
SymbolLayout derive_layout(const CodeInstance& inst);

struct Stripe {
    std::vector<FieldElement> symbols;  // length n; erased entries hold zero
    std::vector<bool> erased;           // length n

    std::vector<uint32_t> erased_columns() const;
};

Stripe encode(const CodeInstance& inst, const std::vector<FieldElement>& data);

/// Columns-at-E independence test; matches decode's success exactly.
bool correctable(const CodeInstance& inst, const std::vector<uint32_t>& erasures);

/// Fills the erased positions with the unique zero-syndrome completion, or
/// returns nullopt when the erased columns are dependent (or no completion
/// exists). Unerased positions are passed through untouched.
std::optional<Stripe> decode(const CodeInstance& inst, const Stripe& stripe);

/// H * symbols; all-zero exactly for codewords.
std::vector<FieldElement> syndrome(const CodeInstance& inst,
                                   const std::vector<FieldElement>& symbols);

// ---- stripe files ----
// Little-endian binary: magic "MRLS", u16 version, u16 reserved, u64 artifact
// hash, u32 n, u32 symbol byte width, ceil(n/8) mask bytes, then n packed
// symbols. Characteristic 2 packs the coefficient vector as bits; odd
// characteristic stores one coefficient per byte.

uint32_t symbol_byte_width(const FieldSpec& f);
std::vector<uint8_t> pack_symbol(const FieldElement& e);
FieldElement unpack_symbol(const FieldRef& f, const uint8_t* bytes);

void write_stripe(const std::string& path, const CodeInstance& inst, const Stripe& stripe,
                  uint64_t artifact_hash);
Stripe read_stripe(const std::string& path, const CodeInstance& inst, uint64_t artifact_hash);

}  // namespace mrlocal

#endif
