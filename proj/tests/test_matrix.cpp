#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mrlocal/matrix.hpp"

using namespace mrlocal;

namespace {

FMatrix random_matrix(const FieldRef& f, size_t rows, size_t cols, std::mt19937_64& gen) {
    FMatrix m(rows, cols, f);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = f->element(gen() % f->size());
    return m;
}

FMatrix identity(const FieldRef& f, size_t n) {
    FMatrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    FieldRef f = FieldSpec::make(2, 3);
    CHECK(rank(identity(f, 3)) == 3);

    // repeated column forces a deficiency
    FMatrix m(3, 4, f);
    std::mt19937_64 gen(5);
    m = random_matrix(f, 3, 4, gen);
    for (size_t r = 0; r < 3; ++r) m.at(r, 3) = m.at(r, 1);
    CHECK(rank(m) < 4);
}

TEST_CASE("rank equals rank of the transpose") {
    std::mt19937_64 gen(17);
    FieldRef f = FieldSpec::make(2, 6);
    for (int trial = 0; trial < 50; ++trial) {
        FMatrix m = random_matrix(f, 3 + gen() % 3, 3 + gen() % 3, gen);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("elimination determinant agrees with Laplace expansion") {
    std::mt19937_64 gen(23);
    for (auto spec : {FieldSpec::make(2, 3), FieldSpec::make(2, 6), FieldSpec::make(3, 2)}) {
        for (int trial = 0; trial < 120; ++trial) {
            size_t n = 1 + gen() % 5;
            FMatrix m = random_matrix(spec, n, n, gen);
            FieldElement d1 = det(m);
            FieldElement d2 = det_laplace(m);
            CHECK(d1 == d2);
            CHECK((rank(m) == n) == !d1.is_zero());
            CHECK(null_space_basis(m).empty() == !d1.is_zero());
        }
    }
}

TEST_CASE("determinant edge cases") {
    FieldRef f = FieldSpec::make(2, 3);
    CHECK(det(identity(f, 4)) == f->one());
    FMatrix z(3, 3, f);
    std::mt19937_64 gen(2);
    z = random_matrix(f, 3, 3, gen);
    for (size_t c = 0; c < 3; ++c) z.at(1, c) = f->zero();
    CHECK(det(z).is_zero());
    CHECK_THROWS(det(random_matrix(f, 2, 3, gen)));
}

TEST_CASE("null space basis is canonical, in-kernel and independent") {
    FieldRef f = FieldSpec::make(2, 6);

    SUBCASE("single row (1, a)") {
        FieldElement a = f->element(2);
        FMatrix m(1, 2, f);
        m.at(0, 0) = f->one();
        m.at(0, 1) = a;
        auto basis = null_space_basis(m);
        REQUIRE(basis.size() == 1);
        // canonical: free column set to one, pivot solved
        CHECK(basis[0][1] == f->one());
        CHECK(basis[0][0] == a);  // -a in characteristic 2
        CHECK((basis[0][0] + a * basis[0][1]).is_zero());
    }
    SUBCASE("identity has empty kernel") {
        FMatrix m(3, 3, f);
        for (int i = 0; i < 3; ++i) m.at(i, i) = f->one();
        CHECK(null_space_basis(m).empty());
    }
    SUBCASE("random matrices: kernel dimension, membership, independence") {
        std::mt19937_64 gen(31);
        for (int trial = 0; trial < 60; ++trial) {
            size_t rows = 1 + gen() % 4, cols = 1 + gen() % 5;
            FMatrix m = random_matrix(f, rows, cols, gen);
            auto basis = null_space_basis(m);
            CHECK(basis.size() == cols - rank(m));
            for (const auto& v : basis) {
                for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
            }
            if (!basis.empty()) {
                FMatrix stacked(basis.size(), cols, f);
                for (size_t r = 0; r < basis.size(); ++r)
                    for (size_t c = 0; c < cols; ++c) stacked.at(r, c) = basis[r][c];
                CHECK(rank(stacked) == basis.size());
            }
        }
    }
}

TEST_CASE("solve") {
    FieldRef f = FieldSpec::make(2, 9);  // GF(512)
    std::mt19937_64 gen(41);

    SUBCASE("identity system") {
        FMatrix id(4, 4, f);
        for (int i = 0; i < 4; ++i) id.at(i, i) = f->one();
        std::vector<FieldElement> b;
        for (int i = 0; i < 4; ++i) b.push_back(f->element(gen() % f->size()));
        auto sol = solve(id, b);
        REQUIRE(sol.status == LinearSolve::Status::Unique);
        CHECK(sol.x == b);
    }
    SUBCASE("inconsistent singular system") {
        FMatrix m(2, 2, f);
        m.at(0, 0) = f->one();
        m.at(0, 1) = f->one();
        m.at(1, 0) = f->one();
        m.at(1, 1) = f->one();
        auto sol = solve(m, {f->one(), f->zero()});
        CHECK(sol.status == LinearSolve::Status::Inconsistent);
    }
    SUBCASE("random invertible 5x5 round trip") {
        for (int trial = 0; trial < 40; ++trial) {
            FMatrix m = random_matrix(f, 5, 5, gen);
            if (det(m).is_zero()) continue;
            std::vector<FieldElement> b;
            for (int i = 0; i < 5; ++i) b.push_back(f->element(gen() % f->size()));
            auto sol = solve(m, b);
            REQUIRE(sol.status == LinearSolve::Status::Unique);
            CHECK(m.apply(sol.x) == b);
        }
    }
    SUBCASE("underdetermined flagged, particular solution still valid") {
        FMatrix m(1, 3, f);
        for (int c = 0; c < 3; ++c) m.at(0, c) = f->element(c + 1);
        auto sol = solve(m, {f->element(5)});
        REQUIRE(sol.status == LinearSolve::Status::Underdetermined);
        CHECK(sol.nullity == 2);
        CHECK(m.apply(sol.x) == std::vector<FieldElement>{f->element(5)});
    }
}

TEST_CASE("select_columns") {
    FieldRef f = FieldSpec::make(2, 3);
    std::mt19937_64 gen(3);
    FMatrix m = random_matrix(f, 3, 6, gen);
    FMatrix s = m.select_columns({1, 4});
    CHECK(s.cols() == 2);
    for (size_t r = 0; r < 3; ++r) {
        CHECK(s.at(r, 0) == m.at(r, 1));
        CHECK(s.at(r, 1) == m.at(r, 4));
    }
    CHECK_THROWS(m.select_columns({9}));
}
