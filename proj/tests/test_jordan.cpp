#include "doctest.h"

#include "coxkit/jordan.hpp"

#include "test_support.hpp"

using namespace coxkit;

namespace {

JordanType type_of(std::initializer_list<std::pair<long long, std::size_t>> blocks) {
    JordanType t;
    for (const auto& [eig, size] : blocks) t.add(eig, size);
    return t;
}

}  // namespace

TEST_CASE("canonical ordering: eigenvalue ascending, size descending") {
    JordanType t;
    t.add(1, 2);
    t.add(-1, 3);
    t.add(1, 4);
    t.add(1, 2);
    REQUIRE(t.blocks().size() == 3);
    CHECK(t.blocks()[0].eigenvalue == -1);
    CHECK(t.blocks()[1].size == 4);
    CHECK(t.blocks()[2].size == 2);
    CHECK(t.blocks()[2].multiplicity == 2);
    CHECK(t.total_dimension() == 11);
    CHECK(t.block_count() == 4);
    CHECK(t.to_string() == "J(-1,3) + J(1,4) + J(1,2)^2");
}

TEST_CASE("jordan_type_at on a matrix already in Jordan form") {
    const auto j = RationalMatrix::jordan_block(1, 3);
    CHECK(jordan_type_at(j, 1) == type_of({{1, 3}}));
    CHECK(jordan_type_at(j, 0).empty());
    CHECK(jordan_type_at(j, 2).empty());
}

TEST_CASE("jordan_type_at of Kronecker products, against the rank sequence") {
    const auto k11 = kron(RationalMatrix::jordan_block(1, 2), RationalMatrix::jordan_block(1, 3));
    CHECK(jordan_type_at(k11, 1) == type_of({{1, 4}, {1, 2}}));

    // ranks of powers of kron(J(0,2), J(0,3)): 6, 2, 0
    const auto k00 = kron(RationalMatrix::jordan_block(0, 2), RationalMatrix::jordan_block(0, 3));
    CHECK(k00.rank() == 2);
    CHECK((k00 * k00).rank() == 0);
    CHECK(jordan_type_at(k00, 0) == type_of({{0, 2}, {0, 2}, {0, 1}, {0, 1}}));
}

TEST_CASE("full_jordan_type needs the whole spectrum") {
    CHECK(full_jordan_type(RationalMatrix::identity(3), {Rational(1)}) ==
          type_of({{1, 1}, {1, 1}, {1, 1}}));
    const auto k = kron(RationalMatrix::jordan_block(2, 2), RationalMatrix::jordan_block(3, 2));
    CHECK(full_jordan_type(k, {Rational(6)}) == type_of({{6, 3}, {6, 1}}));
    CHECK_THROWS_AS(full_jordan_type(k, {Rational(1)}), IncompleteSpectrumError);
    // duplicate candidates are deduplicated, not double counted
    CHECK(full_jordan_type(k, {Rational(6), Rational(6), Rational(0)}) ==
          type_of({{6, 3}, {6, 1}}));
}

TEST_CASE("block sizes at mu sum to dim minus the stable rank") {
    testing::Rng rng(404);
    for (int trial = 0; trial < 15; ++trial) {
        const auto m = testing::random_int_matrix(rng, 4, -2, 2);
        for (const Rational& mu : {Rational(0), Rational(1), Rational(-1)}) {
            RationalMatrix shifted = m;
            for (std::size_t i = 0; i < 4; ++i) shifted.at(i, i) -= mu;
            const std::size_t stable = shifted.pow(4).rank();
            CHECK(jordan_type_at(m, mu).total_dimension() == 4 - stable);
        }
    }
}

TEST_CASE("similarity invariance under random unimodular conjugation") {
    testing::Rng rng(1234);
    for (int trial = 0; trial < 15; ++trial) {
        RationalMatrix m(5, 5);
        // random block-diagonal seed with eigenvalues in {0, 1}
        std::size_t at = 0;
        while (at < 5) {
            const std::size_t size = std::min<std::size_t>(5 - at, 1 + rng.next() % 3);
            const Rational eig = rng.next() % 2;
            for (std::size_t i = 0; i < size; ++i) {
                m.at(at + i, at + i) = eig;
                if (i + 1 < size) m.at(at + i, at + i + 1) = 1;
            }
            at += size;
        }
        const auto p = testing::random_unimodular(rng, 5);
        const auto conj = p * m * *p.inverse();
        for (const Rational& mu : {Rational(0), Rational(1)})
            CHECK(jordan_type_at(conj, mu) == jordan_type_at(m, mu));
    }
}

TEST_CASE("exp preserves the number and sizes of Jordan blocks") {
    testing::Rng rng(999);
    for (int trial = 0; trial < 10; ++trial) {
        // strictly upper triangular, hence nilpotent
        RationalMatrix n(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) n.at(i, j) = rng.range(-2, 2);
        const auto of_n = jordan_type_at(n, 0);
        const auto of_exp = full_jordan_type(exp_nilpotent(n), {Rational(1)});
        CHECK(of_n.sizes() == of_exp.sizes());
    }
}
