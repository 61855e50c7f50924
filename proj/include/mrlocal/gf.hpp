// Exact arithmetic in GF(p^m) with elements kept as coefficient vectors in
// the polynomial basis. Fields are built from a monic irreducible modulus
// over Z_p; the default modulus for (p, m) is the first irreducible in
// counting order, so instances are reproducible. Everything here is desk
// scale by design: no log/antilog tables, no carry-less tricks.

#ifndef MRLOCAL_GF_HPP
#define MRLOCAL_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mrlocal {

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// Deterministic modulus search: returns the monic irreducible of degree m
/// over Z_p whose non-leading coefficient vector (constant term first) comes
/// first in counting order. Exhaustive trial division underneath.
std::vector<uint32_t> find_irreducible(uint32_t p, uint32_t m);

bool is_prime(uint32_t v);

/// Irreducibility by trial division against every monic polynomial of degree
/// 1..deg/2. Coefficients constant-term first, leading coefficient included.
bool is_irreducible(const std::vector<uint32_t>& poly, uint32_t p);

class FieldElement {
public:
    FieldElement() = default;  // unbound; any arithmetic on it throws
    FieldElement(FieldRef spec, std::vector<uint32_t> coeffs);

    const FieldRef& field() const { return spec_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    bool bound() const { return spec_ != nullptr; }
    bool is_zero() const;

    /// Position of this element in the field's enumeration order:
    /// sum coeffs[i] * p^i.
    uint64_t index() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;

    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;
    /// iterations-fold Frobenius, i.e. this^(p^iterations).
    FieldElement frobenius(uint32_t iterations) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    /// Orders by enumeration index; mixing fields is an error.
    bool operator<(const FieldElement& rhs) const;

    std::string to_string() const;

private:
    void require_same_field(const FieldElement& rhs) const;

    FieldRef spec_;
    std::vector<uint32_t> coeffs_;
};

/// GF(p^m) as Z_p[x]/(modulus). Immutable; hold through FieldRef and share
/// freely across threads.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Field with the deterministic default modulus for (p, m).
    static FieldRef make(uint32_t p, uint32_t m);
    /// Field with an explicit monic irreducible modulus (validated).
    static FieldRef make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t size() const { return size_; }
    /// Modulus coefficients, constant term first, length m+1, monic.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Element whose coefficient vector is the base-p digits of idx.
    FieldElement element(uint64_t idx) const;
    FieldElement from_coeffs(std::vector<uint32_t> coeffs) const;

    bool same(const FieldSpec& other) const;

private:
    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t p_;
    uint32_t m_;
    uint64_t size_;
    std::vector<uint32_t> modulus_;
};

/// The subfield of size p^d inside GF(p^m), d | m, as an explicit element
/// list in enumeration order. Membership is the Frobenius fixed-point test
/// e^(p^d) == e; no isomorphism tables are kept.
struct SubfieldView {
    FieldRef parent;
    uint32_t sub_degree = 0;
    std::vector<FieldElement> elements;

    uint64_t size() const { return elements.size(); }
    bool contains(const FieldElement& e) const;
};

SubfieldView subfield_elements(const FieldRef& spec, uint32_t sub_degree);

/// First `count` nonzero elements (enumeration order) whose pairwise
/// quotients fall outside the subfield, so the dilates rep * subfield meet
/// only in {0}. Throws when count exceeds (p^m - 1) / (|sub| - 1).
std::vector<FieldElement> mult_coset_reps(const FieldRef& spec,
                                          const SubfieldView& sub,
                                          size_t count);

/// Concatenates the blocks' coefficient vectors (block order, constant term
/// first within each block) into a coordinate vector of the target field.
/// Additive in the blocks; block degrees must sum to the target degree and
/// all characteristics must match.
FieldElement concat_elements(const std::vector<FieldElement>& blocks,
                             const FieldRef& target);

struct WIndependence {
    bool independent = false;
    /// A zero-sum subset of minimal size when independent is false.
    std::vector<FieldElement> witness;
};

/// Exhaustive check that no nonempty subset of size <= w sums to zero.
/// Characteristic-2 fields only; w larger than the set is capped at |set|.
WIndependence is_w_independent(const std::vector<FieldElement>& set, uint32_t w);

/// One element per beta in the base field: the concatenation of beta^e for
/// each listed exponent, optionally prefixed with a single 1 bit. Exponents
/// must be odd and the block degrees must add up to the target degree.
/// Characteristic 2. Output follows the base field's enumeration order.
std::vector<FieldElement> bch_set(const FieldRef& base,
                                  const std::vector<uint32_t>& exponents,
                                  bool leading_one,
                                  const FieldRef& target);

}  // namespace mrlocal

#endif
