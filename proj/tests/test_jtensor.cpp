#include "doctest.h"

#include "coxkit/coxeter.hpp"
#include "coxkit/fixtures.hpp"
#include "coxkit/jtensor.hpp"

using namespace coxkit;

namespace {

JordanSum sum_of(std::initializer_list<std::tuple<long long, std::size_t, std::size_t>> blocks) {
    JordanSum s;
    for (const auto& [eig, size, mult] : blocks) s.add(eig, size, mult);
    return s;
}

JordanSum singleton(const Rational& eig, std::size_t size) {
    JordanSum s;
    s.add(eig, size);
    return s;
}

}  // namespace

TEST_CASE("box_pair: the four eigenvalue cases") {
    CHECK(box_pair({1, 2}, {1, 3}) == sum_of({{1, 4, 1}, {1, 2, 1}}));
    CHECK(box_pair({0, 2}, {1, 3}) == sum_of({{0, 2, 3}}));
    CHECK(box_pair({1, 3}, {0, 2}) == sum_of({{0, 2, 3}}));  // swapped operands
    CHECK(box_pair({0, 2}, {0, 3}) == sum_of({{0, 2, 2}, {0, 1, 2}}));
    CHECK(box_pair({2, 2}, {3, 3}) == sum_of({{6, 4, 1}, {6, 2, 1}}));
    CHECK(box_pair({2, 1}, {3, 1}) == sum_of({{6, 1, 1}}));
}

TEST_CASE("box_pair conserves the total dimension") {
    for (std::size_t s = 1; s <= 6; ++s)
        for (std::size_t t = 1; t <= 6; ++t)
            for (long long a : {0LL, 1LL, -1LL, 2LL})
                for (long long b : {0LL, 1LL, -1LL, 2LL}) {
                    INFO("s=", s, " t=", t, " a=", a, " b=", b);
                    CHECK(box_pair({a, s}, {b, t}).total_dimension() == s * t);
                }
}

TEST_CASE("box_pair agrees with the Kronecker oracle, all cases up to 5x5") {
    for (std::size_t s = 1; s <= 5; ++s)
        for (std::size_t t = s; t <= 5; ++t)
            for (long long a : {0LL, 1LL, -1LL, 2LL})
                for (long long b : {0LL, 1LL, -1LL, 2LL}) {
                    INFO("s=", s, " t=", t, " a=", a, " b=", b);
                    CHECK(box_pair({a, s}, {b, t}) == brute_force_box({{a, s}, {b, t}}));
                }
}

TEST_CASE("box_many via the coefficient polynomial") {
    CHECK(box_many({{1, 2}, {1, 3}}) == sum_of({{1, 4, 1}, {1, 2, 1}}));
    CHECK(box_many({{Rational(1, 2), 1}}) == singleton(Rational(1, 2), 1));
    CHECK(box_many({{1, 2}, {1, 2}, {1, 2}}) == sum_of({{1, 4, 1}, {1, 2, 2}}));
    CHECK(box_many({{2, 2}, {3, 2}}) == sum_of({{6, 3, 1}, {6, 1, 1}}));
    CHECK_THROWS_AS(box_many({{0, 2}, {1, 3}}), ZeroEigenvalueError);
    CHECK_THROWS_AS(box_many({}), std::invalid_argument);
}

TEST_CASE("box_sums distributes over direct sums") {
    CHECK(box_sums(singleton(1, 3), singleton(1, 1)) == singleton(1, 3));
    CHECK(box_sums(singleton(1, 3), singleton(1, 2)) == sum_of({{1, 4, 1}, {1, 2, 1}}));
    CHECK(box_sums(singleton(-1, 2), singleton(-1, 2)) == sum_of({{1, 3, 1}, {1, 1, 1}}));

    JordanSum mixed;
    mixed.add(1, 2, 2);
    mixed.add(0, 1, 1);
    const JordanSum out = box_sums(mixed, singleton(1, 2));
    // two copies of J(1,2) (x) J(1,2) = J(1,3) + J(1,1), plus J(0,1) (x) J(1,2) = J(0,1)^2
    CHECK(out == sum_of({{1, 3, 2}, {1, 1, 2}, {0, 1, 2}}));
}

TEST_CASE("brute force oracle on explicit small products") {
    CHECK(brute_force_box({{1, 2}, {1, 3}}) == sum_of({{1, 4, 1}, {1, 2, 1}}));
    CHECK(brute_force_box({{0, 2}, {0, 2}}) == sum_of({{0, 2, 1}, {0, 1, 2}}));
    CHECK(brute_force_box({{2, 2}, {3, 2}}) == sum_of({{6, 3, 1}, {6, 1, 1}}));
    CHECK_THROWS_AS(brute_force_box({{1, 100}}, 50), DimensionCapError);
}

TEST_CASE("box_many equals the oracle and the pair fold on mixed factor lists") {
    const std::vector<std::vector<JordanFactor>> cases = {
        {{1, 2}, {-1, 3}, {2, 2}},
        {{-1, 2}, {-1, 2}, {-1, 2}, {-1, 2}},
        {{2, 3}, {Rational(1, 2), 2}},
        {{1, 4}, {1, 4}},
        {{-1, 5}, {2, 2}, {1, 1}},
    };
    for (const auto& factors : cases) {
        const JordanSum closed = box_many(factors);
        CHECK(closed == brute_force_box(factors));
        JordanSum folded = singleton(factors[0].eigenvalue, factors[0].size);
        for (std::size_t i = 1; i < factors.size(); ++i)
            folded = box_sums(folded, singleton(factors[i].eigenvalue, factors[i].size));
        CHECK(closed == folded);
        std::vector<JordanFactor> reversed(factors.rbegin(), factors.rend());
        CHECK(closed == box_many(reversed));
    }
}

TEST_CASE("tensoring with an invertible 1x1 block only rescales the eigenvalue") {
    JordanSum a;
    a.add(1, 3, 1);
    a.add(1, 1, 2);
    const JordanSum scaled = box_sums(a, singleton(-2, 1));
    CHECK(scaled.sizes() == a.sizes());
    Rational eigen;
    REQUIRE(scaled.has_single_eigenvalue(&eigen));
    CHECK(eigen == -2);
}

TEST_CASE("product_coxeter composes factor types") {
    // curves carry eigenvalue +1, surfaces -1, threefolds +1
    // P2 x P1
    CHECK(product_coxeter(singleton(-1, 3), 2, singleton(1, 2), 1) ==
          sum_of({{1, 4, 1}, {1, 2, 1}}));
    // (P1 x P1) x P1, folded
    const JordanType p1xp1 = product_coxeter(singleton(1, 2), 1, singleton(1, 2), 1);
    CHECK(p1xp1 == sum_of({{-1, 3, 1}, {-1, 1, 1}}));
    CHECK(product_coxeter(p1xp1, 2, singleton(1, 2), 1) ==
          sum_of({{1, 4, 1}, {1, 2, 2}}));
    // X x point leaves the type alone
    JordanType point;
    point.add(-1, 1);
    CHECK(product_coxeter(singleton(-1, 3), 2, point, 0) == singleton(-1, 3));

    CHECK_THROWS_AS(product_coxeter(singleton(1, 3), 2, singleton(-1, 2), 1),
                    EigenvalueMismatchError);
}

TEST_CASE("fan route matches the tensor route on bundled products") {
    struct Case {
        const char* product;
        const char* x;
        std::size_t nx;
        const char* y;
        std::size_t ny;
    };
    const Case cases[] = {
        {"p1xp1", "p1", 1, "p1", 1},
        {"p2xp1", "p2", 2, "p1", 1},
        {"dp2xp1", "dp2", 2, "p1", 1},
    };
    for (const auto& c : cases) {
        const auto jx = jordan_type_of_coxeter(ChowRing::build(fixture(c.x)));
        const auto jy = jordan_type_of_coxeter(ChowRing::build(fixture(c.y)));
        const auto composed = product_coxeter(jx, c.nx, jy, c.ny);
        const auto direct = jordan_type_of_coxeter(ChowRing::build(fixture(c.product)));
        INFO("product ", c.product);
        CHECK(composed == direct);
    }
}

TEST_CASE("parse_jordan_factors") {
    const auto factors = parse_jordan_factors("J(1,2)  J(-1,3)\nJ(1/2,4)");
    REQUIRE(factors.size() == 3);
    CHECK(factors[0] == JordanFactor{1, 2});
    CHECK(factors[1] == JordanFactor{-1, 3});
    CHECK(factors[2] == JordanFactor{Rational(1, 2), 4});
    CHECK_THROWS_AS(parse_jordan_factors(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_factors("J(1,0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_factors("J(1;2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_factors("K(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_jordan_factors("J(1,2x)"), std::invalid_argument);
}
