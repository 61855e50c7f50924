#include "mrlocal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "mrlocal/combinat.hpp"

namespace mrlocal {
namespace {

uint64_t base_choice_count(const LocalCodeParams& p, PatternFamily family) {
    if (family == PatternFamily::Sd) return p.r + 1;
    uint64_t out = 1;
    for (uint32_t i = 0; i < p.g; ++i) out *= p.r + 1;
    return out;
}

// per-group offsets of the idx-th base choice, most significant group first
std::vector<uint32_t> base_choice_at(const LocalCodeParams& p, PatternFamily family,
                                     uint64_t idx) {
    std::vector<uint32_t> offs(p.g);
    if (family == PatternFamily::Sd) {
        std::fill(offs.begin(), offs.end(), static_cast<uint32_t>(idx));
        return offs;
    }
    for (uint32_t i = p.g; i-- > 0;) {
        offs[i] = static_cast<uint32_t>(idx % (p.r + 1));
        idx /= p.r + 1;
    }
    return offs;
}

uint64_t draw_below(std::mt19937_64& gen, uint64_t bound) {
    // rejection sampling keeps the draw uniform and platform-independent
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
        r = gen();
    } while (r >= limit);
    return r % bound;
}

}  // namespace

uint64_t pattern_count(const LocalCodeParams& p, PatternFamily family) {
    return base_choice_count(p, family) * binomial(p.n - p.g, p.h);
}

ErasurePattern pattern_at(const LocalCodeParams& p, PatternFamily family, uint64_t idx) {
    uint64_t extras_total = binomial(p.n - p.g, p.h);
    if (idx >= base_choice_count(p, family) * extras_total)
        throw std::out_of_range("pattern index out of range");

    std::vector<uint32_t> offs = base_choice_at(p, family, idx / extras_total);
    std::vector<uint32_t> base;
    base.reserve(p.g);
    for (uint32_t i = 0; i < p.g; ++i) base.push_back(i * (p.r + 1) + offs[i]);

    std::vector<bool> taken(p.n, false);
    for (uint32_t c : base) taken[c] = true;
    std::vector<uint32_t> remaining;
    remaining.reserve(p.n - p.g);
    for (uint32_t c = 0; c < p.n; ++c)
        if (!taken[c]) remaining.push_back(c);

    ErasurePattern out;
    out.family = family;
    out.columns = base;
    for (uint32_t pos : combination_at(remaining.size(), p.h, idx % extras_total))
        out.columns.push_back(remaining[pos]);
    std::sort(out.columns.begin(), out.columns.end());
    return out;
}

bool check_pattern(const CodeInstance& inst, const std::vector<uint32_t>& columns,
                   bool prune) {
    const LocalCodeParams& p = inst.params;
    for (size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] >= p.n) throw std::out_of_range("column index out of range");
        if (i > 0 && columns[i] <= columns[i - 1])
            throw std::invalid_argument("pattern columns must be strictly increasing");
    }

    if (!prune) {
        FMatrix sel = inst.parity.select_columns(columns);
        return rank(sel) == columns.size();
    }

    // drop columns that are alone in their wide column, plus their indicator
    // rows; their pivots cannot interact with anything else in the pattern
    std::vector<uint32_t> group_load(p.g, 0);
    for (uint32_t c : columns) ++group_load[c / (p.r + 1)];
    std::vector<uint32_t> kept_cols;
    for (uint32_t c : columns)
        if (group_load[c / (p.r + 1)] > 1) kept_cols.push_back(c);
    if (kept_cols.empty()) return true;

    std::vector<uint32_t> kept_rows;
    for (uint32_t i = 0; i < p.g; ++i)
        if (group_load[i] > 1) kept_rows.push_back(i);
    for (uint32_t b = 0; b < p.h; ++b) kept_rows.push_back(p.g + b);

    FMatrix sub(kept_rows.size(), kept_cols.size(), inst.field);
    for (size_t r = 0; r < kept_rows.size(); ++r)
        for (size_t c = 0; c < kept_cols.size(); ++c)
            sub.at(r, c) = inst.parity.at(kept_rows[r], kept_cols[c]);
    return rank(sub) == kept_cols.size();
}

VerificationReport verify(const CodeInstance& inst, PatternFamily family,
                          const VerifyOptions& opts) {
    auto started = std::chrono::steady_clock::now();
    const LocalCodeParams& p = inst.params;

    VerificationReport report;
    report.family = family;
    report.exhaustive = opts.exhaustive;
    report.total = pattern_count(p, family);

    std::vector<uint64_t> indices;
    if (opts.exhaustive) {
        report.checked = report.total;
    } else {
        std::mt19937_64 gen(opts.seed);
        indices.reserve(opts.samples);
        for (uint64_t i = 0; i < opts.samples; ++i)
            indices.push_back(draw_below(gen, report.total));
        report.checked = indices.size();
    }

    unsigned threads = opts.threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : opts.threads;
    uint64_t work = opts.exhaustive ? report.total : indices.size();
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(work, 1)));

    struct Partial {
        uint64_t failing = 0;
        uint64_t first_fail = UINT64_MAX;  // pattern index, not work position
    };
    std::vector<Partial> parts(threads);

    auto run_range = [&](unsigned who, uint64_t lo, uint64_t hi) {
        Partial& mine = parts[who];
        for (uint64_t w = lo; w < hi; ++w) {
            uint64_t idx = opts.exhaustive ? w : indices[w];
            ErasurePattern pat = pattern_at(p, family, idx);
            if (!check_pattern(inst, pat.columns, opts.prune)) {
                ++mine.failing;
                mine.first_fail = std::min(mine.first_fail, idx);
            }
        }
    };

    if (threads <= 1) {
        run_range(0, 0, work);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (work + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            uint64_t lo = t * chunk;
            uint64_t hi = std::min(work, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    uint64_t first_fail = UINT64_MAX;
    for (const Partial& part : parts) {
        report.failing += part.failing;
        first_fail = std::min(first_fail, part.first_fail);
    }
    report.pass = report.failing == 0;
    if (first_fail != UINT64_MAX)
        report.counterexample = pattern_at(p, family, first_fail);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

VerificationReport mr_census(const CodeInstance& inst, unsigned threads) {
    VerifyOptions opts;
    opts.exhaustive = true;
    opts.threads = threads;
    return verify(inst, PatternFamily::Mr, opts);
}

}  // namespace mrlocal
