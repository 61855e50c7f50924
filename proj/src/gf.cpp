#include "mrlocal/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mrlocal {
namespace {

// ---- Z_p scalar helpers ----

uint32_t mod_inv_scalar(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return static_cast<uint32_t>((t % p + p) % p);
}

// ---- dense polynomial helpers over Z_p, constant term first ----

using Poly = std::vector<uint32_t>;

size_t poly_degree(const Poly& a) {
    size_t d = a.size();
    while (d > 0 && a[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;  // degree of the zero polynomial reported as 0
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

void poly_trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<uint32_t>(
                (out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return out;
}

// divides in place, returns remainder; divisor must be monic after trim
Poly poly_rem(Poly a, const Poly& div, uint32_t p) {
    size_t dd = poly_degree(div);
    while (!poly_is_zero(a) && poly_degree(a) >= dd) {
        size_t da = poly_degree(a);
        uint64_t lead = a[da];  // divisor monic, no scaling needed
        size_t shift = da - dd;
        for (size_t i = 0; i <= dd; ++i) {
            uint64_t sub = lead * div[i] % p;
            a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
        }
    }
    poly_trim(a);
    return a;
}

Poly poly_make_monic(Poly a, uint32_t p) {
    size_t d = poly_degree(a);
    uint32_t lead = a[d];
    if (lead != 1) {
        uint32_t s = mod_inv_scalar(lead, p);
        for (auto& c : a) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * s % p);
    }
    return a;
}

// extended Euclid: returns u with u*a == gcd(a, mod) (mod mod)
Poly poly_ext_gcd_inverse(const Poly& a, const Poly& mod, uint32_t p) {
    Poly r0 = mod, r1 = a;
    Poly s0 = {0}, s1 = {1};
    poly_trim(r1);
    while (!poly_is_zero(r1)) {
        // long division r0 = q*r1 + r
        Poly q(std::max<size_t>(poly_degree(r0) - std::min(poly_degree(r0), poly_degree(r1)) + 1, 1), 0);
        Poly rem = r0;
        size_t d1 = poly_degree(r1);
        uint32_t inv_lead = mod_inv_scalar(r1[d1], p);
        while (!poly_is_zero(rem) && poly_degree(rem) >= d1) {
            size_t dr = poly_degree(rem);
            uint64_t coef = static_cast<uint64_t>(rem[dr]) * inv_lead % p;
            size_t shift = dr - d1;
            if (q.size() <= shift) q.resize(shift + 1, 0);
            q[shift] = static_cast<uint32_t>((q[shift] + coef) % p);
            for (size_t i = 0; i <= d1; ++i) {
                uint64_t sub = coef * r1[i] % p;
                rem[i + shift] = static_cast<uint32_t>((rem[i + shift] + p - sub) % p);
            }
            poly_trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Poly qs = poly_mul(q, s1, p);
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            uint64_t x = i < s0.size() ? s0[i] : 0;
            uint64_t y = i < qs.size() ? qs[i] : 0;
            s2[i] = static_cast<uint32_t>((x + p - y % p) % p);
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
        poly_trim(r1);
    }
    if (poly_degree(r0) != 0 || r0[0] == 0) throw std::domain_error("inverse of zero or non-unit");
    // normalize gcd to 1
    uint32_t scale = mod_inv_scalar(r0[0], p);
    for (auto& c : s0) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * scale % p);
    return poly_rem(std::move(s0), mod, p);
}

Poly digits_of(uint64_t v, uint32_t p, uint32_t len) {
    Poly out(len, 0);
    for (uint32_t i = 0; i < len && v > 0; ++i) {
        out[i] = static_cast<uint32_t>(v % p);
        v /= p;
    }
    return out;
}

uint64_t checked_pow(uint64_t base, uint32_t exp) {
    uint64_t out = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (out > (uint64_t{1} << 62) / base) throw std::overflow_error("field too large");
        out *= base;
    }
    return out;
}

}  // namespace

bool is_prime(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
    size_t deg = poly_degree(poly);
    if (deg == 0) return false;
    if (poly.back() == 0) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            Poly div = digits_of(v, p, static_cast<uint32_t>(d));
            div.push_back(1);  // monic
            if (poly_is_zero(poly_rem(poly, div, p))) return false;
        }
    }
    return true;
}

std::vector<uint32_t> find_irreducible(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("degree must be at least 1");
    uint64_t count = checked_pow(p, m);
    for (uint64_t v = 0; v < count; ++v) {
        Poly cand = digits_of(v, p, m);
        cand.push_back(1);
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// ---- FieldSpec ----

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), size_(checked_pow(p, m)), modulus_(std::move(modulus)) {}

FieldRef FieldSpec::make(uint32_t p, uint32_t m) {
    return make(p, m, find_irreducible(p, m));
}

FieldRef FieldSpec::make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("degree must be at least 1");
    if (modulus.size() != m + 1 || modulus[m] != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
    for (uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    return FieldRef(new FieldSpec(p, m, std::move(modulus)));
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint32_t>(m_, 0));
}

FieldElement FieldSpec::one() const {
    std::vector<uint32_t> c(m_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::element(uint64_t idx) const {
    if (idx >= size_) throw std::out_of_range("element index out of range");
    return FieldElement(shared_from_this(), digits_of(idx, p_, m_));
}

FieldElement FieldSpec::from_coeffs(std::vector<uint32_t> coeffs) const {
    if (coeffs.size() != m_) throw std::invalid_argument("coefficient vector has wrong length");
    for (uint32_t c : coeffs)
        if (c >= p_) throw std::invalid_argument("coefficient out of range");
    return FieldElement(shared_from_this(), std::move(coeffs));
}

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldRef spec, std::vector<uint32_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

uint64_t FieldElement::index() const {
    if (!spec_) throw std::logic_error("unbound field element");
    uint64_t v = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * spec_->characteristic() + coeffs_[i];
    return v;
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (!spec_ || !rhs.spec_) throw std::logic_error("unbound field element");
    if (spec_.get() != rhs.spec_.get() && !spec_->same(*rhs.spec_))
        throw std::invalid_argument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    uint32_t p = spec_->characteristic();
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (coeffs_[i] + rhs.coeffs_[i]) % p;
    return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    if (!spec_) throw std::logic_error("unbound field element");
    uint32_t p = spec_->characteristic();
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = (p - coeffs_[i]) % p;
    return FieldElement(spec_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    uint32_t p = spec_->characteristic();
    Poly prod = poly_mul(coeffs_, rhs.coeffs_, p);
    prod = poly_rem(std::move(prod), spec_->modulus(), p);
    prod.resize(spec_->degree(), 0);
    return FieldElement(spec_, std::move(prod));
}

FieldElement FieldElement::inv() const {
    if (!spec_) throw std::logic_error("unbound field element");
    if (is_zero()) throw std::domain_error("inversion of zero");
    Poly u = poly_ext_gcd_inverse(coeffs_, spec_->modulus(), spec_->characteristic());
    u.resize(spec_->degree(), 0);
    return FieldElement(spec_, std::move(u));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inv(); }

FieldElement FieldElement::pow(uint64_t e) const {
    if (!spec_) throw std::logic_error("unbound field element");
    FieldElement base = *this;
    FieldElement acc = spec_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::frobenius(uint32_t iterations) const {
    if (!spec_) throw std::logic_error("unbound field element");
    FieldElement out = *this;
    for (uint32_t i = 0; i < iterations; ++i) out = out.pow(spec_->characteristic());
    return out;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (!spec_ || !rhs.spec_) return spec_ == rhs.spec_ && coeffs_ == rhs.coeffs_;
    return spec_->same(*rhs.spec_) && coeffs_ == rhs.coeffs_;
}

bool FieldElement::operator<(const FieldElement& rhs) const {
    require_same_field(rhs);
    return index() < rhs.index();
}

std::string FieldElement::to_string() const {
    if (!spec_) return "<unbound>";
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

// ---- subfields and cosets ----

bool SubfieldView::contains(const FieldElement& e) const {
    return e.frobenius(sub_degree) == e;
}

SubfieldView subfield_elements(const FieldRef& spec, uint32_t sub_degree) {
    if (sub_degree == 0 || spec->degree() % sub_degree != 0)
        throw std::invalid_argument("sub-degree must divide the field degree");
    SubfieldView view;
    view.parent = spec;
    view.sub_degree = sub_degree;
    for (uint64_t idx = 0; idx < spec->size(); ++idx) {
        FieldElement e = spec->element(idx);
        if (e.frobenius(sub_degree) == e) view.elements.push_back(std::move(e));
    }
    uint64_t expected = 1;
    for (uint32_t i = 0; i < sub_degree; ++i) expected *= spec->characteristic();
    if (view.elements.size() != expected)
        throw std::logic_error("subfield scan produced wrong cardinality");
    return view;
}

std::vector<FieldElement> mult_coset_reps(const FieldRef& spec,
                                          const SubfieldView& sub,
                                          size_t count) {
    if (!sub.parent->same(*spec)) throw std::invalid_argument("subfield view belongs to another field");
    uint64_t available = (spec->size() - 1) / (sub.size() - 1);
    if (count > available)
        throw std::invalid_argument("requested more coset representatives than exist");
    std::vector<FieldElement> reps;
    for (uint64_t idx = 1; idx < spec->size() && reps.size() < count; ++idx) {
        FieldElement cand = spec->element(idx);
        bool fresh = true;
        for (const FieldElement& r : reps) {
            if (sub.contains(cand * r.inv())) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(std::move(cand));
    }
    if (reps.size() != count) throw std::logic_error("coset representative scan exhausted");
    return reps;
}

FieldElement concat_elements(const std::vector<FieldElement>& blocks, const FieldRef& target) {
    std::vector<uint32_t> coords;
    coords.reserve(target->degree());
    for (const FieldElement& b : blocks) {
        if (!b.bound()) throw std::logic_error("unbound field element");
        if (b.field()->characteristic() != target->characteristic())
            throw std::invalid_argument("block characteristic does not match target");
        coords.insert(coords.end(), b.coeffs().begin(), b.coeffs().end());
    }
    if (coords.size() != target->degree())
        throw std::invalid_argument("block degrees do not sum to the target degree");
    return target->from_coeffs(std::move(coords));
}

WIndependence is_w_independent(const std::vector<FieldElement>& set, uint32_t w) {
    if (w < 1) throw std::invalid_argument("w must be at least 1");
    if (set.empty()) return {true, {}};
    if (set.front().field()->characteristic() != 2)
        throw std::invalid_argument("w-independence is defined for characteristic-2 fields");
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j]) throw std::invalid_argument("set elements must be distinct");

    size_t n = set.size();
    size_t cap = std::min<size_t>(w, n);
    std::vector<size_t> pick;
    // subsets by size, lexicographic inside each size; the first zero sum
    // found is a minimal witness
    for (size_t s = 1; s <= cap; ++s) {
        pick.resize(s);
        for (size_t i = 0; i < s; ++i) pick[i] = i;
        while (true) {
            FieldElement sum = set[pick[0]];
            for (size_t i = 1; i < s; ++i) sum = sum + set[pick[i]];
            if (sum.is_zero()) {
                WIndependence out;
                out.independent = false;
                for (size_t i : pick) out.witness.push_back(set[i]);
                return out;
            }
            // advance combination
            size_t i = s;
            while (i-- > 0) {
                if (pick[i] != i + n - s) {
                    ++pick[i];
                    for (size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_size;
            }
        }
    next_size:;
    }
    return {true, {}};
}

std::vector<FieldElement> bch_set(const FieldRef& base,
                                  const std::vector<uint32_t>& exponents,
                                  bool leading_one,
                                  const FieldRef& target) {
    if (base->characteristic() != 2 || target->characteristic() != 2)
        throw std::invalid_argument("bch_set requires characteristic 2");
    if (exponents.empty()) throw std::invalid_argument("exponent list must be nonempty");
    for (uint32_t e : exponents)
        if (e % 2 == 0) throw std::invalid_argument("exponents must be odd");
    uint32_t need = (leading_one ? 1 : 0) +
                    static_cast<uint32_t>(exponents.size()) * base->degree();
    if (need != target->degree())
        throw std::invalid_argument("block degrees do not sum to the target degree");

    FieldRef bit = leading_one ? FieldSpec::make(2, 1) : nullptr;
    std::vector<FieldElement> out;
    out.reserve(base->size());
    for (uint64_t idx = 0; idx < base->size(); ++idx) {
        FieldElement beta = base->element(idx);
        std::vector<FieldElement> blocks;
        if (leading_one) blocks.push_back(bit->one());
        for (uint32_t e : exponents) blocks.push_back(beta.pow(e));
        out.push_back(concat_elements(blocks, target));
    }
    return out;
}

}  // namespace mrlocal
