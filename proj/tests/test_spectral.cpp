#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dsg/potential.hpp"
#include "dsg/spectral.hpp"
#include "oracles.hpp"

using namespace dsg;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

TEST_CASE("toy 3x3 vacuum Hessian has the textbook entries") {
    const auto h = build_hessian(vacuum_configuration({3, 1.0, 0.0}));
    REQUIRE(h.dimension() == 3);
    for (double d : h.diagonal)
        CHECK(d == doctest::Approx(4.0 * kPi2 + 2.0).epsilon(1e-14));
    CHECK(h.off_diagonal == -1.0);
}

TEST_CASE("kink Hessian diagonal dips where the profile crosses the barrier") {
    const auto kink = solve_kink({501, 1e4, 0.0});
    const auto h = build_hessian(kink);
    CHECK(h.diagonal[250] ==
          doctest::Approx(potential_d2(0.5, 0.0) + 2e4).epsilon(1e-12));
    CHECK(h.diagonal[250] < h.diagonal[0]);
    CHECK(h.diagonal[0] ==
          doctest::Approx(potential_d2(kink.phi[0], 0.0) + 2e4).epsilon(1e-12));
}

TEST_CASE("vacuum spectrum matches the closed form") {
    for (int n_sites : {11, 101, 501}) {
        for (double a : {0.0, 0.6}) {
            const double g = 1e4;
            const auto modes =
                eigendecompose(build_hessian(vacuum_configuration({n_sites, g, a})));
            const auto expected = oracles::homogeneous_spectrum(
                n_sites, potential_d2(0.0, a), g);
            for (int k = 0; k < n_sites; ++k) {
                const double w2 = modes.omega[k] * modes.omega[k];
                CHECK(std::abs(w2 - expected[k]) <= 1e-8 * expected[k]);
            }
        }
    }
}

TEST_CASE("eigenvectors are orthonormal with small residual") {
    const auto kink = solve_kink({201, 1e4, 0.6});
    const auto h = build_hessian(kink);
    const auto modes = eigendecompose(h);
    const int n = h.dimension();

    const Eigen::MatrixXd gram =
        modes.modes.transpose() * modes.modes - Eigen::MatrixXd::Identity(n, n);
    CHECK(gram.cwiseAbs().maxCoeff() <= 1e-10);

    const Eigen::MatrixXd b = h.dense();
    for (int k = 0; k < n; ++k) {
        const double w2 = modes.omega[k] * modes.omega[k];
        const double res =
            (b * modes.modes.col(k) - w2 * modes.modes.col(k)).cwiseAbs().maxCoeff();
        CHECK(res <= 1e-9 * h.inf_norm());
    }
    for (int k = 1; k < n; ++k) CHECK(modes.omega[k] >= modes.omega[k - 1]);
}

TEST_CASE("frequencies sum to the trace") {
    const auto h = build_hessian(solve_kink({301, 1e5, 0.6}));
    const auto modes = eigendecompose(h);
    double trace = 0.0;
    for (double d : h.diagonal) trace += d;
    double sum = 0.0;
    for (int k = 0; k < modes.omega.size(); ++k)
        sum += modes.omega[k] * modes.omega[k];
    CHECK(sum == doctest::Approx(trace).epsilon(1e-8));
}

TEST_CASE("sign convention fixes each eigenvector deterministically") {
    const auto modes =
        eigendecompose(build_hessian(vacuum_configuration({101, 1e4, 0.0})));
    for (int k = 0; k < modes.modes.cols(); ++k) {
        for (int i = 0; i < modes.modes.rows(); ++i) {
            const double v = modes.modes(i, k);
            if (std::abs(v) > 1e-12) {
                CHECK(v > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("single site chain") {
    HessianMatrix h;
    h.diagonal = {4.0};
    h.off_diagonal = 0.0;
    const auto modes = eigendecompose(h);
    REQUIRE(modes.omega.size() == 1);
    CHECK(modes.omega[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(zero_point_energy(modes) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zero point energy of the vacuum matches the closed form") {
    const double g = 1e4;
    const auto modes =
        eigendecompose(build_hessian(vacuum_configuration({501, g, 0.0})));
    const auto w2 = oracles::homogeneous_spectrum(501, potential_d2(0.0, 0.0), g);
    double expected = 0.0;
    for (double v : w2) expected += 0.5 * std::sqrt(v);
    CHECK(zero_point_energy(modes) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("vacuum frequencies are nondecreasing in the coupling") {
    const auto low =
        eigendecompose(build_hessian(vacuum_configuration({11, 50.0, 0.3})));
    const auto high =
        eigendecompose(build_hessian(vacuum_configuration({11, 100.0, 0.3})));
    for (int k = 0; k < 11; ++k) CHECK(high.omega[k] >= low.omega[k]);
    CHECK(zero_point_energy(high) > zero_point_energy(low));
}

TEST_CASE("expansion around a potential maximum is rejected") {
    FieldConfiguration config;
    config.params = {11, 1.0, 0.0};
    config.phi.assign(11, 0.5);  // every site on the barrier top
    config.kind = Sector::Vacuum;
    CHECK_THROWS_AS(eigendecompose(build_hessian(config)), InstabilityError);
}

TEST_CASE("weak-coupling kink keeps a certified stable soft mode") {
    const auto h = build_hessian(solve_kink({501, 1e4, 0.6}));
    const auto modes = eigendecompose(h);
    CHECK(eigenvalues_below(h, -modes.stability_floor) == 0);
    CHECK(modes.floored_count == 1);
    CHECK(modes.stability_floor ==
          doctest::Approx(4.0 * 501 *
                          std::numeric_limits<double>::epsilon() *
                          h.inf_norm()));
    CHECK(modes.omega[0] ==
          doctest::Approx(std::sqrt(modes.stability_floor)).epsilon(1e-12));
    for (int k = 0; k < modes.omega.size(); ++k) CHECK(modes.omega[k] > 0.0);
}

TEST_CASE("kink Hessians of all nine cells are stable") {
    for (double g : {1e4, 1e5, 1e6})
        for (double a : {0.0, 0.6, 0.99}) {
            const auto h = build_hessian(solve_kink({501, g, a}));
            const auto modes = eigendecompose(h);
            CHECK(eigenvalues_below(h, -modes.stability_floor) == 0);
            CHECK(modes.omega[0] > 0.0);
        }
}

TEST_CASE("Sturm counts bracket the spectrum") {
    const auto h = build_hessian(vacuum_configuration({11, 100.0, 0.0}));
    const auto w2 = oracles::homogeneous_spectrum(11, potential_d2(0.0, 0.0), 100.0);
    CHECK(eigenvalues_below(h, w2.front() - 1e-6) == 0);
    CHECK(eigenvalues_below(h, w2.front() + 1e-6) == 1);
    CHECK(eigenvalues_below(h, w2.back() + 1e-6) == 11);
}
