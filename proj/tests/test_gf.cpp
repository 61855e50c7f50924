#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mrlocal/gf.hpp"
#include "mrlocal/matrix.hpp"

using namespace mrlocal;

namespace {

// Independent irreducibility oracle: full product scan. A degree-m monic
// polynomial is reducible iff it equals f*g with both factors monic of
// degree >= 1; we test divisibility by plain long division written here.
bool oracle_divides(const std::vector<uint32_t>& divisor, std::vector<uint32_t> target,
                    uint32_t p) {
    size_t dd = divisor.size() - 1;
    auto degree = [](const std::vector<uint32_t>& v) {
        size_t d = v.size();
        while (d > 0 && v[d - 1] == 0) --d;
        return d == 0 ? size_t{0} : d - 1;
    };
    auto is_zero = [](const std::vector<uint32_t>& v) {
        return std::all_of(v.begin(), v.end(), [](uint32_t c) { return c == 0; });
    };
    while (!is_zero(target) && degree(target) >= dd) {
        size_t shift = degree(target) - dd;
        uint32_t lead = target[degree(target)];
        for (size_t i = 0; i <= dd; ++i) {
            uint64_t sub = static_cast<uint64_t>(lead) * divisor[i] % p;
            target[i + shift] = static_cast<uint32_t>((target[i + shift] + p - sub) % p);
        }
    }
    return is_zero(target);
}

bool oracle_irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
    size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    for (size_t d = 1; d <= deg / 2; ++d) {
        uint64_t total = 1;
        for (size_t i = 0; i < d; ++i) total *= p;
        for (uint64_t v = 0; v < total; ++v) {
            std::vector<uint32_t> divisor(d + 1, 0);
            uint64_t value = v;
            for (size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<uint32_t>(value % p);
                value /= p;
            }
            divisor[d] = 1;
            if (oracle_divides(divisor, poly, p)) return false;
        }
    }
    return true;
}

std::vector<uint32_t> oracle_first_irreducible(uint32_t p, uint32_t m) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= p;
    for (uint64_t v = 0; v < total; ++v) {
        std::vector<uint32_t> cand(m + 1, 0);
        uint64_t value = v;
        for (uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<uint32_t>(value % p);
            value /= p;
        }
        cand[m] = 1;
        if (oracle_irreducible(cand, p)) return cand;
    }
    return {};
}

FieldElement random_element(const FieldRef& f, std::mt19937_64& gen) {
    return f->element(gen() % f->size());
}

}  // namespace

TEST_CASE("find_irreducible matches the exhaustive oracle") {
    // frozen expected values, computed by the oracle below
    CHECK(find_irreducible(2, 3) == std::vector<uint32_t>{1, 1, 0, 1});  // x^3+x+1
    CHECK(find_irreducible(2, 4) == std::vector<uint32_t>{1, 1, 0, 0, 1});  // x^4+x+1

    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 3}, {2, 4}, {2, 6},
                        {3, 2}, {3, 3}, {5, 2}}) {
        auto got = find_irreducible(p, m);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(got == oracle_first_irreducible(p, m));
        CHECK(got.size() == m + 1);
        CHECK(got.back() == 1);
        CHECK(oracle_irreducible(got, p));
        CHECK(find_irreducible(p, m) == got);  // deterministic
    }
}

TEST_CASE("rejects non-prime characteristic and bad moduli") {
    CHECK_THROWS(find_irreducible(4, 2));
    CHECK_THROWS(find_irreducible(1, 2));
    CHECK_THROWS(FieldSpec::make(2, 3, {1, 1, 1}));        // wrong length
    CHECK_NOTHROW(FieldSpec::make(2, 2, {1, 1, 1}));       // x^2+x+1 is irreducible
    CHECK_THROWS(FieldSpec::make(2, 2, {0, 0, 1}));        // x^2 reducible
    CHECK_THROWS(FieldSpec::make(2, 2, {1, 0, 1}));        // (x+1)^2
}

TEST_CASE("arithmetic in GF(8)") {
    FieldRef f = FieldSpec::make(2, 3);  // modulus x^3+x+1
    FieldElement x = f->from_coeffs({0, 1, 0});
    FieldElement x2 = f->from_coeffs({0, 0, 1});
    CHECK(x * x2 == f->from_coeffs({1, 1, 0}));  // x^3 = x+1 mod x^3+x+1
    CHECK(f->one().inv() == f->one());
    for (uint64_t i = 0; i < f->size(); ++i) {
        FieldElement a = f->element(i);
        CHECK((a + a).is_zero());  // characteristic 2
        if (!a.is_zero()) {
            CHECK(a * a.inv() == f->one());
            CHECK(a / a == f->one());
        }
    }
    CHECK_THROWS(f->zero().inv());
}

TEST_CASE("cross-field arithmetic is rejected") {
    FieldRef f8 = FieldSpec::make(2, 3);
    FieldRef f16 = FieldSpec::make(2, 4);
    CHECK_THROWS(f8->one() + f16->one());
    CHECK_THROWS(f8->one() * f16->one());
    // equal specs built twice interoperate
    FieldRef f8b = FieldSpec::make(2, 3);
    CHECK(f8->one() + f8b->one() == f8->zero());
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 gen(7);
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 3}, {2, 6}, {2, 9}, {3, 2}, {5, 2}, {7, 1}}) {
        FieldRef f = FieldSpec::make(p, m);
        for (int trial = 0; trial < 60; ++trial) {
            FieldElement a = random_element(f, gen);
            FieldElement b = random_element(f, gen);
            FieldElement c = random_element(f, gen);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK(a * a.inv() == f->one());
        }
    }
}

TEST_CASE("pow and frobenius") {
    FieldRef f = FieldSpec::make(2, 4);
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElement a = random_element(f, gen);
        FieldElement b = random_element(f, gen);
        CHECK(a.frobenius(0) == a);
        CHECK(a.pow(0) == f->one());
        CHECK(a.pow(5) == a * a * a * a * a);
        // Frobenius additivity in characteristic 2
        CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
        // every element is fixed by the full-field Frobenius
        CHECK(a.frobenius(f->degree()) == a);
    }
    // pow(a, p^i) agrees with iterated Frobenius
    for (uint64_t i = 0; i < f->size(); ++i) {
        FieldElement a = f->element(i);
        CHECK(a.frobenius(2) == a.pow(4));
        CHECK(a.frobenius(3) == a.pow(8));
    }
}

TEST_CASE("subfield enumeration") {
    FieldRef f16 = FieldSpec::make(2, 4);

    SUBCASE("prime subfield") {
        SubfieldView sub = subfield_elements(f16, 1);
        REQUIRE(sub.size() == 2);
        CHECK(sub.elements[0] == f16->zero());
        CHECK(sub.elements[1] == f16->one());
    }
    SUBCASE("GF(4) inside GF(16): the four solutions of x^4 = x") {
        SubfieldView sub = subfield_elements(f16, 2);
        // independent scan: e*e*e*e == e
        std::vector<FieldElement> expect;
        for (uint64_t i = 0; i < 16; ++i) {
            FieldElement e = f16->element(i);
            if (e * e * e * e == e) expect.push_back(e);
        }
        REQUIRE(expect.size() == 4);
        CHECK(sub.elements == expect);
        // closure under + and *
        for (const auto& a : sub.elements)
            for (const auto& b : sub.elements) {
                CHECK(sub.contains(a + b));
                CHECK(sub.contains(a * b));
            }
    }
    SUBCASE("whole field") {
        SubfieldView sub = subfield_elements(f16, 4);
        CHECK(sub.size() == 16);
    }
    SUBCASE("non-divisor degree is rejected") {
        CHECK_THROWS(subfield_elements(f16, 3));
    }
    SUBCASE("membership iff Frobenius fixed point") {
        SubfieldView sub = subfield_elements(f16, 2);
        for (uint64_t i = 0; i < 16; ++i) {
            FieldElement e = f16->element(i);
            bool listed = std::find(sub.elements.begin(), sub.elements.end(), e) !=
                          sub.elements.end();
            CHECK(listed == (e.frobenius(2) == e));
        }
    }
}

TEST_CASE("multiplicative coset representatives") {
    FieldRef f16 = FieldSpec::make(2, 4);
    SubfieldView sub = subfield_elements(f16, 2);

    auto reps = mult_coset_reps(f16, sub, 4);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0] == f16->one());
    // dilates intersect only in zero: a_i*f == a_j*f' forces f == f' == 0
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            for (const auto& fe : sub.elements)
                for (const auto& fe2 : sub.elements) {
                    if (reps[i] * fe == reps[j] * fe2) {
                        CHECK(fe.is_zero());
                        CHECK(fe2.is_zero());
                    }
                }
    // count = 1 is always the identity alone
    auto one_rep = mult_coset_reps(f16, sub, 1);
    CHECK(one_rep == std::vector<FieldElement>{f16->one()});
    // (16-1)/(4-1) = 5 cosets exist
    CHECK_NOTHROW(mult_coset_reps(f16, sub, 5));
    CHECK_THROWS(mult_coset_reps(f16, sub, 6));
}

TEST_CASE("concat_elements") {
    FieldRef f2 = FieldSpec::make(2, 1);
    FieldRef f4 = FieldSpec::make(2, 2);
    FieldRef f32 = FieldSpec::make(2, 5);

    SUBCASE("definition and zero") {
        FieldElement e = concat_elements({f2->one(), f4->zero(), f4->zero()}, f32);
        CHECK(e == f32->from_coeffs({1, 0, 0, 0, 0}));
        CHECK(concat_elements({f2->zero(), f4->zero(), f4->zero()}, f32).is_zero());
    }
    SUBCASE("additive and bijective, checked exhaustively") {
        std::set<uint64_t> seen;
        for (uint64_t a = 0; a < 2; ++a)
            for (uint64_t b = 0; b < 4; ++b)
                for (uint64_t c = 0; c < 4; ++c) {
                    FieldElement e = concat_elements(
                        {f2->element(a), f4->element(b), f4->element(c)}, f32);
                    seen.insert(e.index());
                }
        CHECK(seen.size() == 32);  // bijection onto GF(32)

        std::mt19937_64 gen(3);
        for (int trial = 0; trial < 50; ++trial) {
            uint64_t a1 = gen() % 2, b1 = gen() % 4, c1 = gen() % 4;
            uint64_t a2 = gen() % 2, b2 = gen() % 4, c2 = gen() % 4;
            FieldElement lhs =
                concat_elements({f2->element(a1), f4->element(b1), f4->element(c1)}, f32) +
                concat_elements({f2->element(a2), f4->element(b2), f4->element(c2)}, f32);
            FieldElement rhs = concat_elements({f2->element(a1) + f2->element(a2),
                                                f4->element(b1) + f4->element(b2),
                                                f4->element(c1) + f4->element(c2)},
                                               f32);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("degree and characteristic mismatches are rejected") {
        CHECK_THROWS(concat_elements({f2->one(), f4->zero()}, f32));
        FieldRef f9 = FieldSpec::make(3, 2);
        FieldRef f27 = FieldSpec::make(3, 3);
        CHECK_THROWS(concat_elements({f9->one(), f2->one()}, f27));
    }
}

TEST_CASE("w-independence") {
    FieldRef f4 = FieldSpec::make(2, 2);
    FieldRef f32 = FieldSpec::make(2, 5);

    SUBCASE("single nonzero element") {
        CHECK(is_w_independent({f32->one()}, 1).independent);
    }
    SUBCASE("char-2 cancellation witness") {
        FieldElement gamma = f32->element(2);
        auto res = is_w_independent({f32->one(), gamma, f32->one() + gamma}, 3);
        CHECK_FALSE(res.independent);
        CHECK(res.witness.size() == 3);  // minimal: no pair sums to zero
        FieldElement sum = res.witness[0] + res.witness[1] + res.witness[2];
        CHECK(sum.is_zero());
    }
    SUBCASE("a set containing zero fails at w = 1") {
        auto res = is_w_independent({f32->zero(), f32->one()}, 1);
        CHECK_FALSE(res.independent);
        CHECK(res.witness.size() == 1);
    }
    SUBCASE("duplicates rejected") {
        CHECK_THROWS(is_w_independent({f32->one(), f32->one()}, 2));
    }
    SUBCASE("odd characteristic rejected") {
        FieldRef f9 = FieldSpec::make(3, 2);
        CHECK_THROWS(is_w_independent({f9->one()}, 1));
    }
    SUBCASE("the prefix set 1|b|b^3 over GF(4) is 5-independent") {
        auto s = bch_set(f4, {1, 3}, true, f32);
        REQUIRE(s.size() == 4);
        CHECK(is_w_independent(s, 5).independent);
    }
}

TEST_CASE("bch_set shapes") {
    SUBCASE("leading-one shape over GF(4)") {
        FieldRef f4 = FieldSpec::make(2, 2);
        FieldRef f32 = FieldSpec::make(2, 5);
        auto s = bch_set(f4, {1, 3}, true, f32);
        REQUIRE(s.size() == 4);
        // beta = 0 contributes 1|0|0
        CHECK(s[0] == f32->from_coeffs({1, 0, 0, 0, 0}));
        // block structure: coords = (1) | beta | beta^3
        FieldRef f2 = FieldSpec::make(2, 1);
        for (uint64_t i = 0; i < 4; ++i) {
            FieldElement beta = f4->element(i);
            CHECK(s[i] == concat_elements({f2->one(), beta, beta.pow(3)}, f32));
        }
        // all distinct
        std::set<uint64_t> idx;
        for (const auto& e : s) idx.insert(e.index());
        CHECK(idx.size() == 4);
    }
    SUBCASE("two-block shape over GF(8)") {
        FieldRef f8 = FieldSpec::make(2, 3);
        FieldRef f64 = FieldSpec::make(2, 6);
        auto s = bch_set(f8, {1, 3}, false, f64);
        REQUIRE(s.size() == 8);
        CHECK(s[0].is_zero());  // beta = 0, no leading block
        CHECK(is_w_independent(std::vector<FieldElement>(s.begin() + 1, s.end()), 4)
                  .independent);
    }
    SUBCASE("degree mismatch rejected") {
        FieldRef f4 = FieldSpec::make(2, 2);
        FieldRef f16 = FieldSpec::make(2, 4);
        CHECK_THROWS(bch_set(f4, {1, 3}, true, f16));
        CHECK_THROWS(bch_set(f4, {1, 2}, true, FieldSpec::make(2, 5)));  // even exponent
    }
}

TEST_CASE("Moore matrix law on GF(16): (y, y^2, y^4) rows vs GF(2) independence") {
    FieldRef f = FieldSpec::make(2, 4);
    FieldRef f2 = FieldSpec::make(2, 1);
    uint64_t q = f->size();
    for (uint64_t a = 1; a < q; ++a)
        for (uint64_t b = a + 1; b < q; ++b)
            for (uint64_t c = b + 1; c < q; ++c) {
                std::vector<FieldElement> y{f->element(a), f->element(b), f->element(c)};
                FMatrix moore(3, 3, f);
                for (int col = 0; col < 3; ++col) {
                    moore.at(0, col) = y[col];
                    moore.at(1, col) = y[col].pow(2);
                    moore.at(2, col) = y[col].pow(4);
                }
                // rank oracle over the prime field on the coordinate vectors
                FMatrix coords(3, f->degree(), f2);
                for (int row = 0; row < 3; ++row)
                    for (uint32_t col = 0; col < f->degree(); ++col)
                        coords.at(row, col) = f2->element(y[row].coeffs()[col]);
                bool gf2_independent = rank(coords) == 3;
                CHECK(!det(moore).is_zero() == gf2_independent);
            }
}
