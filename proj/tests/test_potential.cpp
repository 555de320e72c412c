#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dsg/potential.hpp"
#include "oracles.hpp"

using namespace dsg;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
}  // namespace

TEST_CASE("potential values at the reference points") {
    CHECK(potential_value(0.0, 0.6) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(potential_value(0.5, 0.6) == doctest::Approx(0.8).epsilon(1e-13));
    CHECK(potential_value(0.25, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(potential_value(0.5, 0.0) == doctest::Approx(2.0).epsilon(1e-13));
    // relative minima carry V = 2(1-a)
    CHECK(potential_value(0.5, 0.99) == doctest::Approx(0.02).epsilon(1e-10));
}

TEST_CASE("first and second derivatives at symmetry points") {
    for (double a : {0.0, 0.3, 0.6, 1.0}) {
        CHECK(potential_d1(0.0, a) == 0.0);
        CHECK(std::abs(potential_d1(0.5, a)) < 1e-14);
    }
    CHECK(potential_d2(0.0, 0.6) ==
          doctest::Approx(4.0 * (1.0 + 3.0 * 0.6) * kPi2).epsilon(1e-13));
    CHECK(potential_d2(0.0, 0.6) == doctest::Approx(110.54).epsilon(1e-4));
    CHECK(potential_d2(0.5, 0.6) ==
          doctest::Approx(4.0 * (5.0 * 0.6 - 1.0) * kPi2).epsilon(1e-13));
    CHECK(potential_d2(0.5, 0.6) == doctest::Approx(78.96).epsilon(1e-4));
}

TEST_CASE("family parameter outside [0,1] is rejected") {
    CHECK_THROWS_AS(potential_value(0.3, 1.5), DomainError);
    CHECK_THROWS_AS(potential_value(0.3, -0.1), DomainError);
    CHECK_THROWS_AS(potential_d1(0.3, 2.0), DomainError);
    CHECK_THROWS_AS(potential_d2(0.3, -1e-9), DomainError);
    CHECK_THROWS_AS(critical_points(1.0000001), DomainError);
}

TEST_CASE("derivatives agree with finite differences at random samples") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> phi_dist(-2.0, 2.0);
    std::uniform_real_distribution<double> a_dist(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double phi = phi_dist(rng);
        const double a = a_dist(rng);
        const double fd1 = oracles::fd_derivative(&potential_value, phi, a);
        const double d1 = potential_d1(phi, a);
        CHECK(std::abs(fd1 - d1) <= 1e-8 * std::max(1.0, std::abs(d1)));
        const double fd2 = oracles::fd_derivative(&potential_d1, phi, a);
        const double d2 = potential_d2(phi, a);
        CHECK(std::abs(fd2 - d2) <= 1e-8 * std::max(1.0, std::abs(d2)));
    }
}

TEST_CASE("potential is periodic, reflection symmetric and non-negative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> phi_dist(-3.0, 3.0);
    std::uniform_real_distribution<double> a_dist(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double phi = phi_dist(rng);
        const double a = a_dist(rng);
        const double v = potential_value(phi, a);
        CHECK(v >= 0.0);
        CHECK(potential_value(phi + 1.0, a) == doctest::Approx(v).epsilon(1e-11));
        CHECK(potential_value(-phi, a) == doctest::Approx(v).epsilon(1e-11));
    }
}

TEST_CASE("critical points in the single-lump range") {
    const auto pts = critical_points(0.0);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].location == 0.0);
    CHECK(pts[0].kind == CriticalPointKind::AbsoluteMinimum);
    CHECK(pts[1].location == 0.5);
    CHECK(pts[1].kind == CriticalPointKind::Maximum);
    CHECK(pts[1].curvature < 0.0);
}

TEST_CASE("critical points at a = 0.6") {
    const auto pts = critical_points(0.6);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].location == 0.0);
    CHECK(pts[0].kind == CriticalPointKind::AbsoluteMinimum);
    CHECK(pts[1].location == doctest::Approx(0.2766).epsilon(5e-4));
    CHECK(pts[1].kind == CriticalPointKind::Maximum);
    CHECK(pts[2].location == 0.5);
    CHECK(pts[2].kind == CriticalPointKind::RelativeMinimum);
    CHECK(pts[3].location == doctest::Approx(0.7234).epsilon(5e-4));
    CHECK(pts[3].kind == CriticalPointKind::Maximum);
    // interior maxima carry the curvature pi^2 (1 - a(2+15a))/a
    const double expected = kPi2 * (1.0 - 0.6 * (2.0 + 15.0 * 0.6)) / 0.6;
    CHECK(pts[1].curvature == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("critical point classification matches curvature sign") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> a_dist(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        double a = a_dist(rng);
        if (std::abs(a - 0.2) < 1e-3) a = 0.5;
        for (const auto& pt : critical_points(a)) {
            CHECK(std::abs(potential_d1(pt.location, a)) < 1e-12);
            if (pt.kind == CriticalPointKind::Maximum)
                CHECK(pt.curvature < 0.0);
            else
                CHECK(pt.curvature > 0.0);
            if (pt.kind == CriticalPointKind::AbsoluteMinimum)
                CHECK(potential_value(pt.location, a) <= 1e-12);
        }
    }
}

TEST_CASE("a = 0.99 has four critical points") {
    const auto pts = critical_points(0.99);
    CHECK(pts.size() == 4);
}

TEST_CASE("a = 1 turns the half-integer points into absolute minima") {
    const auto pts = critical_points(1.0);
    REQUIRE(pts.size() == 4);
    CHECK(pts[1].location == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(pts[1].kind == CriticalPointKind::Maximum);
    CHECK(pts[2].location == 0.5);
    CHECK(pts[2].kind == CriticalPointKind::AbsoluteMinimum);
    CHECK(pts[3].location == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("a = 1/5 is rejected as degenerate") {
    CHECK_THROWS_AS(critical_points(0.2), DegenerateCurvatureError);
}
