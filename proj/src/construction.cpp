#include "mrlocal/construction.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace mrlocal {
namespace {

bool is_power_of_two(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

uint32_t log2_exact(uint64_t v) {
    uint32_t e = 0;
    while (v > 1) {
        v >>= 1;
        ++e;
    }
    return e;
}

struct PrimePower {
    uint32_t p;
    uint32_t e;
};

std::optional<PrimePower> as_prime_power(uint64_t v) {
    if (v < 2) return std::nullopt;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= v; ++d) {
        if (v % d != 0) continue;
        uint32_t e = 0;
        while (v % d == 0) {
            v /= d;
            ++e;
        }
        if (v != 1) return std::nullopt;
        return PrimePower{d, e};
    }
    return PrimePower{static_cast<uint32_t>(v), 1};  // v itself prime
}

uint32_t ceil_div(uint32_t a, uint32_t b) { return (a + b - 1) / b; }

uint64_t upow(uint64_t base, uint32_t e) {
    uint64_t out = 1;
    while (e--) out *= base;
    return out;
}

std::vector<uint32_t> prime_divisors(uint32_t v) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

[[noreturn]] void reject(const std::string& condition) { throw ParamError(condition); }

}  // namespace

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::Linearized: return "linearized";
        case Construction::SdH3: return "sd-h3";
        case Construction::VandermondeGeneral: return "vandermonde-general";
        case Construction::VandermondeImproved: return "vandermonde-improved";
    }
    return "?";
}

Construction construction_from_name(const std::string& name) {
    if (name == "linearized") return Construction::Linearized;
    if (name == "sd-h3") return Construction::SdH3;
    if (name == "vandermonde-general") return Construction::VandermondeGeneral;
    if (name == "vandermonde-improved") return Construction::VandermondeImproved;
    throw ParamError("unknown construction: " + name);
}

LocalCodeParams LocalCodeParams::from_krh(uint32_t k, uint32_t r, uint32_t h) {
    LocalCodeParams p;
    p.k = k;
    p.r = r;
    p.h = h;
    if (r < 2) reject("group size violates r >= 2");
    if (h < 1) reject("heavy parity count violates h >= 1");
    if (k < 1) reject("data symbol count violates k >= 1");
    if ((k + h) % r != 0) reject("divisibility r | (k+h) violated");
    p.g = (k + h) / r;
    if (p.g < 2) reject("group count violates g >= 2");
    p.n = p.g * (r + 1);
    return p;
}

void LocalCodeParams::validate() const {
    LocalCodeParams check = from_krh(k, r, h);
    if (check.g != g || check.n != n) reject("inconsistent derived parameters g, n");
}

NormalizeResult normalize_params(uint32_t k, uint32_t r, uint32_t h, Construction c) {
    if (r < 2) reject("group size violates r >= 2");
    if (h < 1) reject("heavy parity count violates h >= 1");
    if (k < 1) reject("data symbol count violates k >= 1");
    if (k + h <= r) reject("group count violates g >= 2");

    NormalizeResult out;
    auto note = [&](const std::string& what, uint64_t before, uint64_t after) {
        std::ostringstream os;
        os << what << ": " << before << " -> " << after;
        out.adjustments.push_back(os.str());
    };

    uint32_t h2 = h;
    if (c == Construction::SdH3) {
        if (h > 3) reject("sd-h3 requires exactly h = 3");
        if (h < 3) {
            h2 = 3;
            note("h", h, h2);
        }
    }

    // Step 1: lift r where the construction needs structure on r+1.
    uint32_t r2 = r;
    if (c == Construction::Linearized || c == Construction::SdH3) {
        while (!is_power_of_two(r2 + 1)) ++r2;
    } else if (c == Construction::VandermondeImproved) {
        while (!as_prime_power(r2 + 1)) ++r2;
    }
    if (r2 != r) note("r", r, r2);

    // Step 2: smallest admissible group count covering the requested k.
    uint32_t gmin = std::max<uint32_t>(2, ceil_div(k + h2, r2));
    uint32_t g = gmin;
    switch (c) {
        case Construction::Linearized:
            while (!is_power_of_two(g)) ++g;
            break;
        case Construction::SdH3: {
            // n = g*(r+1) must be a power of two with log2(r+1) | log2(n),
            // so log2(g) must be a positive multiple of log2(r+1)
            uint32_t a = log2_exact(r2 + 1);
            uint32_t s = 1;
            while (upow(2, a * s) < gmin) ++s;
            g = static_cast<uint32_t>(upow(2, a * s));
            break;
        }
        case Construction::VandermondeGeneral:
            while (!as_prime_power(static_cast<uint64_t>(g) * (r2 + 1))) ++g;
            break;
        case Construction::VandermondeImproved: {
            uint32_t p = as_prime_power(r2 + 1)->p;
            uint64_t gp = 1;
            while (gp < gmin || gp < 2) gp *= p;
            g = static_cast<uint32_t>(gp);
            break;
        }
    }

    // Step 3: h-side conditions that normalization does not reshape.
    if (c == Construction::VandermondeGeneral || c == Construction::VandermondeImproved) {
        uint32_t t = ceil_div(h2, g) + (c == Construction::VandermondeImproved ? 2 : 1);
        if (t > h2) reject("exponent split violates t <= h");
        if (c == Construction::VandermondeImproved) {
            uint32_t p = as_prime_power(r2 + 1)->p;
            if (h2 % g == 1) reject("improved regime requires h mod g != 1");
            if (ceil_div(h2, g) % p == p - 1)
                reject("improved regime requires ceil(h/g) mod p != p-1");
        }
    }

    uint32_t k2 = g * r2 - h2;
    if (k2 != k) note("k", k, k2);

    out.params = LocalCodeParams::from_krh(k2, r2, h2);
    return out;
}

FMatrix assemble_parity(const LocalCodeParams& p,
                        const std::vector<std::vector<FieldElement>>& points,
                        const FieldRef& field,
                        const std::function<FieldElement(uint32_t, uint32_t, uint32_t)>& heavy) {
    if (points.size() != p.g) throw std::invalid_argument("point grid must have g rows");
    for (const auto& row : points)
        if (row.size() != p.r + 1) throw std::invalid_argument("point rows must have r+1 entries");
    FMatrix m(p.g + p.h, p.n, field);
    for (uint32_t i = 0; i < p.g; ++i)
        for (uint32_t j = 0; j <= p.r; ++j) m.at(i, i * (p.r + 1) + j) = field->one();
    for (uint32_t b = 0; b < p.h; ++b)
        for (uint32_t i = 0; i < p.g; ++i)
            for (uint32_t j = 0; j <= p.r; ++j)
                m.at(p.g + b, i * (p.r + 1) + j) = heavy(i, j, b);
    return m;
}

namespace {

void require_distinct_rows(const std::vector<std::vector<FieldElement>>& points) {
    for (const auto& row : points)
        for (size_t a = 0; a < row.size(); ++a)
            for (size_t b = a + 1; b < row.size(); ++b)
                if (row[a] == row[b]) throw std::logic_error("points within a group collide");
}

}  // namespace

CodeInstance build_linearized(const LocalCodeParams& p) {
    p.validate();
    if (!is_power_of_two(p.r + 1)) reject("linearized construction requires r+1 to be a power of two");
    if (!is_power_of_two(p.g)) reject("linearized construction requires g to be a power of two");

    uint32_t w = p.g + p.h;
    uint32_t logn = log2_exact(p.n);
    FieldRef base = FieldSpec::make(2, logn);

    std::vector<uint32_t> exponents;
    bool leading_one = (w % 2 != 0);
    uint32_t top = leading_one ? w - 2 : w - 1;
    for (uint32_t e = 1; e <= top; e += 2) exponents.push_back(e);
    uint32_t deg = (leading_one ? 1 : 0) + static_cast<uint32_t>(exponents.size()) * logn;
    FieldRef field = FieldSpec::make(2, deg);

    std::vector<FieldElement> flat = bch_set(base, exponents, leading_one, field);
    std::vector<std::vector<FieldElement>> points(p.g);
    for (uint32_t i = 0; i < p.g; ++i)
        points[i].assign(flat.begin() + i * (p.r + 1), flat.begin() + (i + 1) * (p.r + 1));
    require_distinct_rows(points);

    CodeInstance inst;
    inst.params = p;
    inst.construction = Construction::Linearized;
    inst.guarantee = Guarantee::MR;
    inst.field = field;
    inst.points = points;
    inst.layout = LinearizedLayout{base, exponents, leading_one};
    inst.parity = assemble_parity(p, points, field, [&](uint32_t i, uint32_t j, uint32_t b) {
        return points[i][j].pow(uint64_t{1} << b);
    });
    return inst;
}

CodeInstance build_sd_h3(const LocalCodeParams& p) {
    p.validate();
    if (p.h != 3) reject("sd-h3 requires exactly h = 3");
    if (!is_power_of_two(p.r + 1)) reject("sd-h3 requires r+1 to be a power of two");
    if (!is_power_of_two(p.n)) reject("sd-h3 requires the code length to be a power of two");
    uint32_t a = log2_exact(p.r + 1);
    uint32_t b = log2_exact(p.n);
    if (b % a != 0) reject("sd-h3 requires log2(r+1) to divide log2(n)");

    FieldRef prefix_field = FieldSpec::make(2, 2 * a + 1);
    FieldRef beta_field = FieldSpec::make(2, a);
    std::vector<FieldElement> prefixes = bch_set(beta_field, {1, 3}, true, prefix_field);

    FieldRef suffix_field = FieldSpec::make(2, b);
    SubfieldView sub = subfield_elements(suffix_field, a);
    std::vector<FieldElement> reps = mult_coset_reps(suffix_field, sub, p.g);

    uint32_t t = 2 * a + 1 + b;
    FieldRef field = FieldSpec::make(2, t);

    std::vector<std::vector<FieldElement>> points(p.g);
    for (uint32_t i = 0; i < p.g; ++i) {
        points[i].reserve(p.r + 1);
        for (uint32_t j = 0; j <= p.r; ++j)
            points[i].push_back(
                concat_elements({prefixes[j], reps[i] * sub.elements[j]}, field));
    }
    require_distinct_rows(points);

    CodeInstance inst;
    inst.params = p;
    inst.construction = Construction::SdH3;
    inst.guarantee = Guarantee::SD;
    inst.field = field;
    inst.points = points;
    inst.layout = SdH3Layout{prefix_field, suffix_field, t, prefixes, sub.elements, reps};
    inst.parity = assemble_parity(p, points, field, [&](uint32_t i, uint32_t j, uint32_t bb) {
        return points[i][j].pow(uint64_t{1} << bb);
    });
    return inst;
}

CodeInstance build_vandermonde(const LocalCodeParams& p, bool improved) {
    p.validate();
    auto npp = as_prime_power(p.n);
    if (!npp) reject("vandermonde construction requires the code length to be a prime power");

    uint32_t t;
    if (improved) {
        auto rpp = as_prime_power(p.r + 1);
        auto gpp = as_prime_power(p.g);
        if (!rpp || !gpp || rpp->p != gpp->p)
            reject("improved regime requires r+1 and g to be powers of one prime");
        uint32_t prime = rpp->p;
        if (p.h % p.g == 1) reject("improved regime requires h mod g != 1");
        if (ceil_div(p.h, p.g) % prime == prime - 1)
            reject("improved regime requires ceil(h/g) mod p != p-1");
        t = ceil_div(p.h, p.g) + 2;
    } else {
        t = ceil_div(p.h, p.g) + 1;
    }
    if (t > p.h) reject("exponent split violates t <= h");

    uint32_t depth = p.h + p.g - t;  // extension degree over the length-n subfield
    uint32_t sub_deg = npp->e;
    FieldRef field = FieldSpec::make(npp->p, sub_deg * depth);
    SubfieldView sub = subfield_elements(field, sub_deg);

    // alpha must have degree exactly `depth` over the subfield, so that
    // 1, alpha, ..., alpha^(depth-1) form a basis
    FieldElement alpha;
    for (uint64_t idx = 0; idx < field->size(); ++idx) {
        FieldElement cand = field->element(idx);
        bool full_degree = true;
        for (uint32_t q : prime_divisors(depth)) {
            if (cand.frobenius(sub_deg * (depth / q)) == cand) {
                full_degree = false;
                break;
            }
        }
        if (full_degree) {
            alpha = cand;
            break;
        }
    }
    if (!alpha.bound()) throw std::logic_error("no degree-d element found");

    FMatrix constraint(p.g - 1, depth, field);
    for (uint32_t i = 0; i + 1 < p.g; ++i)
        for (uint32_t j = 0; j < depth; ++j)
            constraint.at(i, j) = alpha.pow(j).frobenius(sub_deg * i);

    std::vector<std::vector<FieldElement>> kernel = null_space_basis(constraint);
    if (kernel.size() != p.h - t + 1)
        throw std::logic_error("constraint matrix kernel has unexpected dimension");

    // partition the subfield into g sets of r+1
    std::vector<std::vector<FieldElement>> points(p.g);
    if (!improved) {
        for (uint32_t i = 0; i < p.g; ++i)
            points[i].assign(sub.elements.begin() + i * (p.r + 1),
                             sub.elements.begin() + (i + 1) * (p.r + 1));
    } else {
        uint32_t prime = npp->p;
        uint32_t a = as_prime_power(p.r + 1)->e;
        // additive subgroup: span of the first a independent subfield elements
        std::vector<FieldElement> span{field->zero()};
        uint32_t picked = 0;
        for (const FieldElement& cand : sub.elements) {
            if (picked == a) break;
            if (std::find(span.begin(), span.end(), cand) != span.end()) continue;
            std::vector<FieldElement> wider = span;
            FieldElement mult = field->zero();
            for (uint32_t cc = 1; cc < prime; ++cc) {
                mult = mult + cand;
                for (const FieldElement& s : span) wider.push_back(s + mult);
            }
            span = std::move(wider);
            ++picked;
        }
        if (span.size() != p.r + 1) throw std::logic_error("additive subgroup has wrong size");

        std::set<uint64_t> covered;
        uint32_t next_group = 0;
        for (const FieldElement& e : sub.elements) {
            if (covered.count(e.index())) continue;
            if (next_group >= p.g) throw std::logic_error("partition produced too many cosets");
            std::vector<FieldElement> coset;
            for (const FieldElement& s : span) {
                FieldElement shifted = e + s;
                covered.insert(shifted.index());
                coset.push_back(std::move(shifted));
            }
            std::sort(coset.begin(), coset.end());
            points[next_group++] = std::move(coset);
        }
        if (next_group != p.g) throw std::logic_error("partition did not cover the subfield");
    }
    require_distinct_rows(points);

    auto heavy = [&](uint32_t i, uint32_t j, uint32_t b0) {
        const FieldElement& x = points[i][j];
        uint32_t b = b0 + 1;
        if (b <= t - 1) return x.pow(b);
        const std::vector<FieldElement>& u = kernel[b - t];
        FieldElement acc = field->zero();
        for (uint32_t d = 0; d < depth; ++d) acc = acc + u[d] * x.pow(t + d);
        return acc;
    };

    CodeInstance inst;
    inst.params = p;
    inst.construction = improved ? Construction::VandermondeImproved
                                 : Construction::VandermondeGeneral;
    inst.guarantee = Guarantee::MR;
    inst.field = field;
    inst.points = points;
    inst.layout = VandermondeLayout{sub_deg, t, improved, alpha, constraint, kernel};
    inst.parity = assemble_parity(p, points, field, heavy);
    return inst;
}

CodeInstance build(const LocalCodeParams& p, Construction c) {
    switch (c) {
        case Construction::Linearized: return build_linearized(p);
        case Construction::SdH3: return build_sd_h3(p);
        case Construction::VandermondeGeneral: return build_vandermonde(p, false);
        case Construction::VandermondeImproved: return build_vandermonde(p, true);
    }
    throw ParamError("unknown construction");
}

uint64_t field_size_formula(const LocalCodeParams& p, Construction c) {
    uint32_t w = p.g + p.h;
    switch (c) {
        case Construction::Linearized:
            return w % 2 == 0 ? upow(p.n, w / 2) : 2 * upow(p.n, (w - 1) / 2);
        case Construction::SdH3:
            return 2ull * (p.r + 1) * (p.r + 1) * p.n;
        case Construction::VandermondeGeneral:
            return upow(p.n, p.h - ceil_div(p.h, p.g) + p.g - 1);
        case Construction::VandermondeImproved:
            return upow(p.n, p.h - ceil_div(p.h, p.g) + p.g - 2);
    }
    return 0;
}

uint32_t scheme_t(const LocalCodeParams& p, Construction c) {
    switch (c) {
        case Construction::Linearized: return 0;
        case Construction::SdH3:
            return 2 * log2_exact(p.r + 1) + 1 + log2_exact(p.n);
        case Construction::VandermondeGeneral: return ceil_div(p.h, p.g) + 1;
        case Construction::VandermondeImproved: return ceil_div(p.h, p.g) + 2;
    }
    return 0;
}

}  // namespace mrlocal
