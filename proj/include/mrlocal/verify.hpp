// Erasure-pattern enumeration and full-rank checking. A pattern picks one
// column per wide column (or the same offset in every wide column for the
// sector-disk family) plus h extra columns; the code meets its guarantee
// when every such column set is linearly independent. Patterns are indexed
// lexicographically, so enumeration, sampling and parallel verification all
// agree on which counterexample is "first".

#ifndef MRLOCAL_VERIFY_HPP
#define MRLOCAL_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mrlocal/construction.hpp"

namespace mrlocal {

enum class PatternFamily { Mr, Sd };

struct ErasurePattern {
    PatternFamily family = PatternFamily::Mr;
    std::vector<uint32_t> columns;  // sorted, zero-based into the parity matrix
};

uint64_t pattern_count(const LocalCodeParams& p, PatternFamily family);

/// The idx-th pattern in lexicographic order: base picks first (per-group
/// offsets for Mr, one shared offset for Sd), then the h-subset of the
/// remaining columns.
ErasurePattern pattern_at(const LocalCodeParams& p, PatternFamily family, uint64_t idx);

/// True iff the selected parity columns are linearly independent. With
/// prune set, columns that are alone in their wide column are discarded
/// together with their indicator row before the rank check.
bool check_pattern(const CodeInstance& inst, const std::vector<uint32_t>& columns,
                   bool prune = false);

struct VerifyOptions {
    bool exhaustive = true;
    uint64_t samples = 0;   // used when exhaustive is false
    uint64_t seed = 0;
    unsigned threads = 1;   // 0 = hardware concurrency
    bool prune = false;
};

struct VerificationReport {
    PatternFamily family = PatternFamily::Mr;
    bool exhaustive = true;
    uint64_t total = 0;    // family size
    uint64_t checked = 0;
    uint64_t failing = 0;
    bool pass = false;
    std::optional<ErasurePattern> counterexample;  // lowest-index failure
    double seconds = 0.0;
};

VerificationReport verify(const CodeInstance& inst, PatternFamily family,
                          const VerifyOptions& opts = {});

inline VerificationReport verify_mr(const CodeInstance& inst, const VerifyOptions& opts = {}) {
    return verify(inst, PatternFamily::Mr, opts);
}
inline VerificationReport verify_sd(const CodeInstance& inst, const VerifyOptions& opts = {}) {
    return verify(inst, PatternFamily::Sd, opts);
}

/// Exhaustive count of failing one-per-group patterns; quantifies how far an
/// SD-only instance is from maximally recoverable.
VerificationReport mr_census(const CodeInstance& inst, unsigned threads = 1);

}  // namespace mrlocal

#endif
