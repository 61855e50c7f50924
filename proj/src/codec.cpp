#include "mrlocal/codec.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "mrlocal/matrix.hpp"
#include "mrlocal/verify.hpp"

namespace mrlocal {
namespace {

constexpr char kMagic[4] = {'M', 'R', 'L', 'S'};
constexpr uint16_t kVersion = 1;

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
}
void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
uint16_t get_u16(const uint8_t* p) { return static_cast<uint16_t>(p[0] | p[1] << 8); }
uint32_t get_u32(const uint8_t* p) {
    return p[0] | p[1] << 8 | static_cast<uint32_t>(p[2]) << 16 |
           static_cast<uint32_t>(p[3]) << 24;
}
uint64_t get_u64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | p[i];
    return v;
}

}  // namespace

std::vector<uint32_t> Stripe::erased_columns() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < erased.size(); ++i)
        if (erased[i]) out.push_back(i);
    return out;
}

SymbolLayout derive_layout(const CodeInstance& inst) {
    const LocalCodeParams& p = inst.params;
    SymbolLayout layout;
    std::vector<bool> is_local(p.n, false);
    for (uint32_t i = 0; i < p.g; ++i) {
        uint32_t c = inst.column(i, p.r);
        layout.local_pos.push_back(c);
        is_local[c] = true;
    }
    for (uint32_t c = p.n; c-- > 0 && layout.heavy_pos.size() < p.h;)
        if (!is_local[c]) layout.heavy_pos.push_back(c);
    std::sort(layout.heavy_pos.begin(), layout.heavy_pos.end());
    std::vector<bool> is_parity = is_local;
    for (uint32_t c : layout.heavy_pos) is_parity[c] = true;
    for (uint32_t c = 0; c < p.n; ++c)
        if (!is_parity[c]) layout.data_pos.push_back(c);

    std::vector<uint32_t> parity_cols = layout.local_pos;
    parity_cols.insert(parity_cols.end(), layout.heavy_pos.begin(), layout.heavy_pos.end());
    std::sort(parity_cols.begin(), parity_cols.end());
    if (rank(inst.parity.select_columns(parity_cols)) != parity_cols.size())
        throw std::runtime_error("parity-position submatrix is singular; encoding unavailable");
    return layout;
}

std::vector<FieldElement> syndrome(const CodeInstance& inst,
                                   const std::vector<FieldElement>& symbols) {
    return inst.parity.apply(symbols);
}

Stripe encode(const CodeInstance& inst, const std::vector<FieldElement>& data) {
    const LocalCodeParams& p = inst.params;
    if (data.size() != p.k) throw std::invalid_argument("expected exactly k data symbols");
    SymbolLayout layout = derive_layout(inst);

    std::vector<uint32_t> parity_cols = layout.local_pos;
    parity_cols.insert(parity_cols.end(), layout.heavy_pos.begin(), layout.heavy_pos.end());
    std::sort(parity_cols.begin(), parity_cols.end());

    // rhs = -H_data * data
    std::vector<FieldElement> rhs(p.g + p.h, inst.field->zero());
    for (uint32_t d = 0; d < p.k; ++d) {
        if (!data[d].field()->same(*inst.field))
            throw std::invalid_argument("data symbol bound to the wrong field");
        for (uint32_t row = 0; row < p.g + p.h; ++row)
            rhs[row] = rhs[row] - inst.parity.at(row, layout.data_pos[d]) * data[d];
    }

    LinearSolve sol = solve(inst.parity.select_columns(parity_cols), rhs);
    if (sol.status != LinearSolve::Status::Unique)
        throw std::runtime_error("parity solve did not produce a unique solution");

    Stripe out;
    out.symbols.assign(p.n, inst.field->zero());
    out.erased.assign(p.n, false);
    for (uint32_t d = 0; d < p.k; ++d) out.symbols[layout.data_pos[d]] = data[d];
    for (size_t i = 0; i < parity_cols.size(); ++i) out.symbols[parity_cols[i]] = sol.x[i];
    return out;
}

bool correctable(const CodeInstance& inst, const std::vector<uint32_t>& erasures) {
    if (erasures.empty()) return true;
    std::vector<uint32_t> cols = erasures;
    std::sort(cols.begin(), cols.end());
    for (size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= inst.params.n) throw std::out_of_range("erasure index out of range");
        if (i > 0 && cols[i] == cols[i - 1])
            throw std::invalid_argument("erasure positions must be distinct");
    }
    if (cols.size() > inst.params.g + inst.params.h) return false;
    return rank(inst.parity.select_columns(cols)) == cols.size();
}

std::optional<Stripe> decode(const CodeInstance& inst, const Stripe& stripe) {
    const LocalCodeParams& p = inst.params;
    if (stripe.symbols.size() != p.n || stripe.erased.size() != p.n)
        throw std::invalid_argument("stripe length mismatch");

    std::vector<uint32_t> erased = stripe.erased_columns();
    if (erased.empty()) return stripe;
    if (!correctable(inst, erased)) return std::nullopt;

    // rhs = -H_unerased * values
    std::vector<FieldElement> rhs(p.g + p.h, inst.field->zero());
    for (uint32_t c = 0; c < p.n; ++c) {
        if (stripe.erased[c]) continue;
        for (uint32_t row = 0; row < p.g + p.h; ++row)
            rhs[row] = rhs[row] - inst.parity.at(row, c) * stripe.symbols[c];
    }
    LinearSolve sol = solve(inst.parity.select_columns(erased), rhs);
    if (!sol.consistent() || sol.status != LinearSolve::Status::Unique) return std::nullopt;

    Stripe out = stripe;
    for (size_t i = 0; i < erased.size(); ++i) {
        out.symbols[erased[i]] = sol.x[i];
        out.erased[erased[i]] = false;
    }
    return out;
}

// ---- stripe files ----

uint32_t symbol_byte_width(const FieldSpec& f) {
    if (f.characteristic() == 2) return (f.degree() + 7) / 8;
    return f.degree();
}

std::vector<uint8_t> pack_symbol(const FieldElement& e) {
    const FieldSpec& f = *e.field();
    std::vector<uint8_t> out(symbol_byte_width(f), 0);
    if (f.characteristic() == 2) {
        for (uint32_t i = 0; i < f.degree(); ++i)
            if (e.coeffs()[i]) out[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    } else {
        for (uint32_t i = 0; i < f.degree(); ++i)
            out[i] = static_cast<uint8_t>(e.coeffs()[i]);
    }
    return out;
}

FieldElement unpack_symbol(const FieldRef& f, const uint8_t* bytes) {
    std::vector<uint32_t> coeffs(f->degree(), 0);
    if (f->characteristic() == 2) {
        for (uint32_t i = 0; i < f->degree(); ++i)
            coeffs[i] = (bytes[i / 8] >> (i % 8)) & 1u;
    } else {
        for (uint32_t i = 0; i < f->degree(); ++i) coeffs[i] = bytes[i];
    }
    return f->from_coeffs(std::move(coeffs));
}

void write_stripe(const std::string& path, const CodeInstance& inst, const Stripe& stripe,
                  uint64_t artifact_hash) {
    const LocalCodeParams& p = inst.params;
    if (stripe.symbols.size() != p.n) throw std::invalid_argument("stripe length mismatch");
    std::vector<uint8_t> buf;
    buf.insert(buf.end(), kMagic, kMagic + 4);
    put_u16(buf, kVersion);
    put_u16(buf, 0);
    put_u64(buf, artifact_hash);
    put_u32(buf, p.n);
    uint32_t width = symbol_byte_width(*inst.field);
    put_u32(buf, width);
    std::vector<uint8_t> mask((p.n + 7) / 8, 0);
    for (uint32_t i = 0; i < p.n; ++i)
        if (stripe.erased[i]) mask[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    buf.insert(buf.end(), mask.begin(), mask.end());
    for (uint32_t i = 0; i < p.n; ++i) {
        std::vector<uint8_t> sym = stripe.erased[i]
                                       ? std::vector<uint8_t>(width, 0)
                                       : pack_symbol(stripe.symbols[i]);
        buf.insert(buf.end(), sym.begin(), sym.end());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open stripe file for writing: " + path);
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

Stripe read_stripe(const std::string& path, const CodeInstance& inst, uint64_t artifact_hash) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open stripe file: " + path);
    std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    const LocalCodeParams& p = inst.params;
    uint32_t width = symbol_byte_width(*inst.field);
    size_t header = 4 + 2 + 2 + 8 + 4 + 4;
    size_t mask_len = (p.n + 7) / 8;
    if (buf.size() < header) throw std::runtime_error("stripe file truncated");
    if (std::memcmp(buf.data(), kMagic, 4) != 0) throw std::runtime_error("bad stripe magic");
    if (get_u16(buf.data() + 4) != kVersion) throw std::runtime_error("unsupported stripe version");
    if (get_u64(buf.data() + 8) != artifact_hash)
        throw std::runtime_error("stripe was produced for a different code artifact");
    if (get_u32(buf.data() + 16) != p.n) throw std::runtime_error("stripe length mismatch");
    if (get_u32(buf.data() + 20) != width) throw std::runtime_error("symbol width mismatch");
    if (buf.size() != header + mask_len + static_cast<size_t>(p.n) * width)
        throw std::runtime_error("stripe file has wrong size");

    Stripe stripe;
    stripe.symbols.assign(p.n, inst.field->zero());
    stripe.erased.assign(p.n, false);
    const uint8_t* mask = buf.data() + header;
    const uint8_t* body = mask + mask_len;
    for (uint32_t i = 0; i < p.n; ++i) {
        stripe.erased[i] = (mask[i / 8] >> (i % 8)) & 1u;
        if (!stripe.erased[i]) stripe.symbols[i] = unpack_symbol(inst.field, body + i * width);
    }
    return stripe;
}

}  // namespace mrlocal
