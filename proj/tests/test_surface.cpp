#include "doctest.h"

#include "coxkit/coxeter.hpp"
#include "coxkit/fixtures.hpp"
#include "coxkit/surface.hpp"

using namespace coxkit;

namespace {

RationalSurfaceModel p2_model(std::size_t t) { return {SurfaceBaseKind::P2, 0, t}; }
RationalSurfaceModel fa_model(long long a, std::size_t t) {
    return {SurfaceBaseKind::Hirzebruch, a, t};
}

}  // namespace

TEST_CASE("K squared tracks the number of blow-ups") {
    CHECK(build_surface_chow(p2_model(0)).k_squared == 9);
    CHECK(build_surface_chow(p2_model(2)).k_squared == 7);
    CHECK(build_surface_chow(p2_model(9)).k_squared == 0);
    for (long long a : {0LL, 1LL, 3LL}) {
        CHECK(build_surface_chow(fa_model(a, 0)).k_squared == 8);
        CHECK(build_surface_chow(fa_model(a, 8)).k_squared == 0);
    }
}

TEST_CASE("canonical coordinates and labels") {
    const auto chow = build_surface_chow(fa_model(3, 2));
    CHECK(chow.labels ==
          std::vector<std::string>{"[X]", "P", "Q", "R1", "R2", "[pt]"});
    CHECK(chow.canonical == std::vector<Rational>{1, -2, 1, 1});
    CHECK(chow.picard_rank == 4);

    const auto p2 = build_surface_chow(p2_model(3));
    CHECK(p2.canonical == std::vector<Rational>{-3, 1, 1, 1});
}

TEST_CASE("the printed 12x12 matrix for nine blow-ups of P2") {
    const auto psi = surface_psi_matrix(build_surface_chow(p2_model(9)));
    RationalMatrix expected = RationalMatrix::identity(12);
    expected.at(0, 1) = -3;
    for (std::size_t j = 2; j <= 10; ++j) expected.at(0, j) = 1;
    expected.at(1, 11) = -3;
    for (std::size_t i = 2; i <= 10; ++i) expected.at(i, 11) = -1;
    CHECK(psi == expected);
}

TEST_CASE("the printed 12x12 matrix for eight blow-ups of F_a") {
    for (long long a : {0LL, 1LL, 3LL}) {
        const auto psi = surface_psi_matrix(build_surface_chow(fa_model(a, 8)));
        RationalMatrix expected = RationalMatrix::identity(12);
        expected.at(0, 1) = a - 2;
        expected.at(0, 2) = -2;
        for (std::size_t j = 3; j <= 10; ++j) expected.at(0, j) = 1;
        expected.at(1, 11) = -2;
        expected.at(2, 11) = -(a + 2);
        for (std::size_t i = 3; i <= 10; ++i) expected.at(i, 11) = -1;
        INFO("a = ", a);
        CHECK(psi == expected);
    }
}

TEST_CASE("Jordan types of blown-up surfaces") {
    CHECK(surface_coxeter(p2_model(9)).jordan.sizes() ==
          std::vector<std::size_t>{2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(surface_coxeter(fa_model(3, 8)).jordan.sizes() ==
          std::vector<std::size_t>{2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(surface_coxeter(p2_model(2)).jordan.sizes() == std::vector<std::size_t>{3, 1, 1});
    CHECK(surface_coxeter(p2_model(0)).jordan.sizes() == std::vector<std::size_t>{3});
}

TEST_CASE("Lefschetz dichotomy at Picard rank 10") {
    CHECK_FALSE(surface_lefschetz(p2_model(9)));
    CHECK_FALSE(surface_lefschetz(fa_model(0, 8)));
    CHECK_FALSE(surface_lefschetz(fa_model(3, 8)));
    CHECK(surface_lefschetz(p2_model(3)));
    CHECK(surface_lefschetz(fa_model(1, 5)));
}

TEST_CASE("block count equals the Picard rank; sizes follow the dichotomy") {
    for (std::size_t t = 0; t <= 12; ++t) {
        for (const auto& model : {p2_model(t), fa_model(0, t), fa_model(1, t), fa_model(3, t)}) {
            const auto report = surface_coxeter(model);
            const std::size_t rank = build_surface_chow(model).picard_rank;
            INFO(model.describe());
            CHECK(report.jordan.block_count() == rank);
            CHECK(report.eigenvalue == -1);
            CHECK(report.polynomial.verified);
            CHECK(report.polynomial.power == rank + 2);
            const auto s = report.jordan.sizes();
            if (rank != 10) {
                CHECK(s.front() == 3);
                CHECK(std::count(s.begin(), s.end(), 1) == static_cast<long>(rank - 1));
                CHECK(report.cross_check == CrossCheck::Match);
            } else {
                CHECK(s == std::vector<std::size_t>{2, 2, 1, 1, 1, 1, 1, 1, 1, 1});
                CHECK(report.cross_check == CrossCheck::NotApplicable);
                CHECK_FALSE(report.lefschetz_canonical);
            }
        }
    }
}

TEST_CASE("toric route and surface route agree on del Pezzo blow-ups") {
    const char* toric[] = {"p2", "dp1", "dp2", "dp3"};
    for (std::size_t t = 0; t <= 3; ++t) {
        const auto surface = surface_coxeter(p2_model(t));
        const auto fan_route = coxeter_report(fixture(toric[t]));
        INFO("t = ", t);
        CHECK(surface.jordan == fan_route.jordan);
        CHECK(surface.polynomial.to_string() == fan_route.polynomial.to_string());
    }
    CHECK(surface_coxeter(fa_model(0, 0)).jordan == coxeter_report(fixture("p1xp1")).jordan);
    CHECK(surface_coxeter(fa_model(1, 0)).jordan == coxeter_report(fixture("dp1")).jordan);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(build_surface_chow({SurfaceBaseKind::Hirzebruch, -1, 0}),
                    std::invalid_argument);
    CHECK(p2_model(9).describe() == "P2 blown up in 9 points");
    CHECK(fa_model(3, 0).describe() == "F3");
}

TEST_CASE("surface spec JSON") {
    const auto p2 = surface_model_from_json(R"({"base": {"type": "P2"}})");
    CHECK(p2.base == SurfaceBaseKind::P2);
    CHECK(p2.blowups == 0);

    const auto fa = surface_model_from_json(R"({"base": {"type": "Hirzebruch", "a": 1}, "blowups": 9})");
    CHECK(fa.base == SurfaceBaseKind::Hirzebruch);
    CHECK(fa.a == 1);
    CHECK(fa.blowups == 9);

    CHECK_THROWS_AS(surface_model_from_json(R"({"base": {"type": "P3"}})"), std::invalid_argument);
    CHECK_THROWS_AS(surface_model_from_json(R"({"base": {"type": "P2", "a": 1}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(surface_model_from_json(R"({"base": {"type": "P2"}, "points": 1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(surface_model_from_json(R"({"base": {"type": "Hirzebruch", "a": -1}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(surface_model_from_json(R"({"base": {"type": "P2"}, "blowups": -3})"),
                    std::invalid_argument);
}
