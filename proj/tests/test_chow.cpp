#include "doctest.h"

#include "coxkit/chow.hpp"
#include "coxkit/fixtures.hpp"

using namespace coxkit;

TEST_CASE("P2: one ray class generates everything") {
    const ChowRing ring = ChowRing::build(fixture("p2"));
    CHECK(ring.graded_dims() == std::vector<std::size_t>{1, 1, 1});
    CHECK(ring.ray_class(0) == ring.ray_class(1));
    CHECK(ring.ray_class(1) == ring.ray_class(2));
    const ChowClass h = ring.ray_class(0);
    CHECK(ring.degree_number(ring.multiply(h, h)) == 1);
}

TEST_CASE("Hirzebruch relations: D1 = D3 and D2 = D4 - a D3") {
    for (long long a : {0LL, 1LL, 2LL, 3LL}) {
        const ChowRing ring = ChowRing::build(hirzebruch(a));
        CHECK(ring.graded_dims() == std::vector<std::size_t>{1, 2, 1});
        const ChowClass p = ring.ray_class(2);  // the second base ray
        const ChowClass q = ring.ray_class(3);
        CHECK(ring.ray_class(0) == p);
        CHECK(ring.ray_class(1) == q - p * Rational(a));
        CHECK(ring.multiply(p, p).is_zero());
        CHECK(ring.degree_number(ring.multiply(q, q)) == a);
        CHECK(ring.degree_number(ring.multiply(p, q)) == 1);
    }
}

TEST_CASE("two-point blow-up of P3: graded dimensions and relations") {
    const ChowRing ring = ChowRing::build(fixture("p3bl2"));
    CHECK(ring.graded_dims() == std::vector<std::size_t>{1, 3, 3, 1});
    // D3*D4 + D4^2 = 0, D3*D5 + D5^2 = 0, D4*D5 = 0
    CHECK(ring.monomial_class({3, 4}) + ring.monomial_class({4, 4}) == ring.zero());
    CHECK(ring.monomial_class({3, 5}) + ring.monomial_class({5, 5}) == ring.zero());
    CHECK(ring.monomial_class({4, 5}).is_zero());
    // D3^3 + D3^2*D5 = 0 and D3^3 + D3^2*D4 = 0
    CHECK(ring.monomial_class({3, 3, 3}) + ring.monomial_class({3, 3, 5}) == ring.zero());
    CHECK(ring.monomial_class({3, 3, 3}) + ring.monomial_class({3, 3, 4}) == ring.zero());
    // D0 = D3 + D4, D1 = D3 + D5, D2 = D3
    CHECK(ring.ray_class(0) == ring.ray_class(3) + ring.ray_class(4));
    CHECK(ring.ray_class(1) == ring.ray_class(3) + ring.ray_class(5));
    CHECK(ring.ray_class(2) == ring.ray_class(3));
}

TEST_CASE("canonical classes") {
    const ChowRing p2 = ChowRing::build(fixture("p2"));
    CHECK(p2.canonical_class() == p2.ray_class(0) * Rational(-3));

    for (long long a : {0LL, 1LL, 3LL}) {
        const ChowRing fa = ChowRing::build(hirzebruch(a));
        CHECK(fa.canonical_class() ==
              fa.ray_class(2) * Rational(a - 2) + fa.ray_class(3) * Rational(-2));
    }

    const ChowRing bl = ChowRing::build(fixture("p3bl2"));
    const ChowClass minus_k = bl.ray_class(3) * Rational(4) + bl.ray_class(4) * Rational(2) +
                              bl.ray_class(5) * Rational(2);
    CHECK(bl.canonical_class() == minus_k * Rational(-1));
}

TEST_CASE("max-cone products all reduce to the point class") {
    for (const auto& name : {"p2", "dp3", "p3", "p3bl2", "p1xp1xp1", "f2"}) {
        const Fan fan = fixture(name);
        const ChowRing ring = ChowRing::build(fan);
        for (const auto& cone : fan.max_cones) {
            const ChowClass product = ring.monomial_class(cone);
            INFO("fixture ", name);
            CHECK(ring.degree_number(product) == 1);
        }
    }
}

TEST_CASE("multiplication is commutative and respects the grading") {
    for (const auto& name : {"dp3", "p3bl2"}) {
        const ChowRing ring = ChowRing::build(fixture(name));
        const auto& dims = ring.graded_dims();
        for (std::size_t d1 = 0; d1 < dims.size(); ++d1)
            for (std::size_t i = 0; i < dims[d1]; ++i)
                for (std::size_t d2 = 0; d2 < dims.size(); ++d2)
                    for (std::size_t j = 0; j < dims[d2]; ++j) {
                        const ChowClass a = ring.basis_class(d1, i);
                        const ChowClass b = ring.basis_class(d2, j);
                        const ChowClass ab = ring.multiply(a, b);
                        CHECK(ab == ring.multiply(b, a));
                        if (d1 + d2 > ring.variety_dim()) CHECK(ab.is_zero());
                        for (std::size_t e = 0; e < dims.size(); ++e)
                            if (e != d1 + d2)
                                for (const auto& c : ab.coords()[e]) CHECK(c == 0);
                    }
    }
}

TEST_CASE("unit is neutral and top-degree products truncate") {
    const ChowRing ring = ChowRing::build(fixture("p2"));
    const ChowClass h = ring.ray_class(0);
    CHECK(ring.multiply(ring.unit(), h) == h);
    const ChowClass h2 = ring.multiply(h, h);
    CHECK(ring.multiply(h, h2).is_zero());  // degree 3 > n = 2
}

TEST_CASE("Chern character of divisors") {
    const ChowRing ring = ChowRing::build(fixture("p2"));
    CHECK(ring.chern_character(ring.zero() * Rational(0)) == ring.unit());

    const ChowClass k = ring.canonical_class();  // -3H
    const ChowClass ch = ring.chern_character(k);
    CHECK(ch.degree(0)[0] == 1);
    CHECK(ch.degree(1)[0] == -3);
    CHECK(ch.degree(2)[0] == Rational(9, 2));

    CHECK_THROWS_AS(ring.chern_character(ring.unit()), DegreeError);
    CHECK_THROWS_AS(ring.chern_character(ch), DegreeError);
}

TEST_CASE("Chern character is exponential: ch(D1 + D2) = ch(D1) ch(D2)") {
    for (const auto& name : {"dp3", "p3bl2", "f1"}) {
        const ChowRing ring = ChowRing::build(fixture(name));
        const ChowClass d1 = ring.ray_class(0) - ring.ray_class(2) * Rational(2);
        const ChowClass d2 = ring.ray_class(1) + ring.ray_class(3);
        CHECK(ring.chern_character(d1 + d2) ==
              ring.multiply(ring.chern_character(d1), ring.chern_character(d2)));
    }
}

TEST_CASE("multiplication operator layout") {
    const ChowRing ring = ChowRing::build(fixture("p2"));
    CHECK(ring.multiplication_operator(ring.unit()) == RationalMatrix::identity(3));

    const auto op = ring.multiplication_operator(ring.chern_character(ring.canonical_class()));
    RationalMatrix expected = RationalMatrix::identity(3);
    expected.at(0, 1) = -3;
    expected.at(0, 2) = Rational(9, 2);
    expected.at(1, 2) = -3;
    CHECK(op == expected);
}

TEST_CASE("multiplying by a positive-degree class is strictly block-triangular") {
    const ChowRing ring = ChowRing::build(fixture("p3bl2"));
    const auto op = ring.multiplication_operator(ring.canonical_class());
    const auto& dims = ring.graded_dims();
    std::vector<std::size_t> degree_of;
    for (std::size_t d = 0; d < dims.size(); ++d)
        degree_of.insert(degree_of.end(), dims[d], d);
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t j = 0; j < op.cols(); ++j)
            if (degree_of[j] != degree_of[i] + 1) CHECK(op.at(i, j) == 0);
}

TEST_CASE("basis labels name the reduced monomials") {
    const ChowRing ring = ChowRing::build(fixture("p3bl2"));
    CHECK(ring.basis_label(0, 0) == "1");
    // degree-1 basis: the three blow-up era classes D3, D4, D5
    CHECK(ring.basis_label(1, 0) == "D3");
    CHECK(ring.basis_label(1, 1) == "D4");
    CHECK(ring.basis_label(1, 2) == "D5");
}
