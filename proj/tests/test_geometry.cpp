#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qmc/capacity.hpp"
#include "qmc/damping_basis.hpp"
#include "qmc/error.hpp"
#include "qmc/geometry.hpp"
#include "test_support.hpp"

using namespace qmc;
using namespace qmc::testing;

TEST_CASE("Bloch conversions") {
    const BlochVector mixed = rho_to_bloch(QubitState());
    CHECK(mixed == BlochVector{0.0, 0.0, 0.0});
    CHECK(rho_to_bloch(QubitState(CMat::diag({1.0, 0.0}))) == BlochVector{0.0, 0.0, 1.0});
    CHECK(rho_to_bloch(QubitState(CMat::diag({0.0, 1.0}))) == BlochVector{0.0, 0.0, -1.0});

    // +v eigenstate (|e> + i|g>)/sqrt(2): rho_eg = -i/2
    const QubitState plus_v(CMat{0.5, cplx(0, -0.5), cplx(0, 0.5), 0.5});
    const BlochVector bv = rho_to_bloch(plus_v);
    CHECK(std::abs(bv.v - 1.0) < 1e-15);

    for (int k = 0; k < 1000; ++k) {
        const QubitState rho = random_state();
        CHECK(max_abs_diff(bloch_to_rho(rho_to_bloch(rho)).matrix(), rho.matrix()) < 1e-14);
    }
    CHECK_THROWS_AS(bloch_to_rho({0.8, 0.8, 0.0}), DomainError);
    CHECK_NOTHROW(bloch_to_rho({1.0, 0.0, 0.0}));
}

TEST_CASE("image ellipsoid") {
    const Ellipsoid unit = image_ellipsoid(AffineMap{});
    CHECK(unit.semi_axes == std::array<double, 3>{1.0, 1.0, 1.0});
    CHECK(unit.center == std::array<double, 3>{0.0, 0.0, 0.0});

    const AffineMap m = affine_map(svc_rates(), 1.0);
    const Ellipsoid e = image_ellipsoid(m);
    CHECK(std::abs(e.semi_axes[0] - kLambda1) < 1e-15);
    CHECK(std::abs(e.semi_axes[1] - kLambda2) < 1e-15);
    CHECK(std::abs(e.semi_axes[2] - kLambda3) < 1e-15);
    CHECK(std::abs(e.center[2] - kShift3) < 1e-15);

    double worst = 0.0;
    for (const auto& p : fibonacci_sphere(10000)) {
        const BlochVector img = apply_affine(m, p);
        CHECK(std::abs(e.surface_residual(img)) <= 1e-10);
        worst = std::max(worst, img.norm());
    }
    CHECK(worst <= 1.0);

    AffineMap flat;
    flat.Lambda = {0.5, 0.0, 0.0};
    try {
        image_ellipsoid(flat);
        FAIL("expected a degenerate-ellipsoid error");
    } catch (const DomainError& err) {
        CHECK(std::string(err.what()).find("v, w") != std::string::npos);
    }
}

TEST_CASE("image of the sphere lies inside the ball for valid channels") {
    for (int k = 0; k < 50; ++k) {
        const AffineMap m = affine_map(rates_from_reservoir(random_reservoir()), uniform(0.0, 4.0));
        for (const auto& p : fibonacci_sphere(500)) CHECK(apply_affine(m, p).norm() <= 1.0 + 1e-12);
    }
}

TEST_CASE("general affine form matches the diagonal map and the propagator") {
    const BlochAffine a = bloch_affine(svc_rates(), 1.0);
    const AffineMap m = affine_map(svc_rates(), 1.0);
    for (int k = 0; k < 50; ++k) {
        const BlochVector b = random_bloch_in_ball();
        const BlochVector x = a(b), y = apply_affine(m, b);
        CHECK(std::abs(x.u - y.u) < 1e-14);
        CHECK(std::abs(x.v - y.v) < 1e-14);
        CHECK(std::abs(x.w - y.w) < 1e-14);
    }
    const RateParams driven = svc_rates(1.5);
    const BlochAffine ad = bloch_affine(driven, 0.7);
    for (int k = 0; k < 20; ++k) {
        const BlochVector b = random_bloch_in_ball();
        const BlochVector x = ad(b);
        const BlochVector y = rho_to_bloch(channel_apply(driven, 0.7, bloch_to_rho(b)));
        CHECK(std::abs(x.u - y.u) < 1e-12);
        CHECK(std::abs(x.v - y.v) < 1e-12);
        CHECK(std::abs(x.w - y.w) < 1e-12);
    }
}

TEST_CASE("fibonacci sphere") {
    const auto pts = fibonacci_sphere(1000);
    CHECK(pts.size() == 1000);
    BlochVector mean;
    for (const auto& p : pts) {
        CHECK(std::abs(p.norm() - 1.0) < 1e-14);
        mean.u += p.u / 1000;
        mean.v += p.v / 1000;
        mean.w += p.w / 1000;
    }
    CHECK(mean.norm() < 1e-2);
}

TEST_CASE("minimal-entropy states of the squeezed channel") {
    const MinimalEntropyResult res = minimal_entropy_states(svc_rates(), 1.0);
    REQUIRE(res.states.size() == 2);
    CHECK_FALSE(res.degenerate);

    // Independent stationary-point solution: inputs (0, +-cos a, -sin a) with
    // sin a = -L3 s3 / (L2^2 - L3^2).
    const double sin_a = -kLambda3 * kShift3 / (kLambda2 * kLambda2 - kLambda3 * kLambda3);
    const double cos_a = std::sqrt(1.0 - sin_a * sin_a);
    const double best = std::hypot(kLambda2 * cos_a, kShift3 - kLambda3 * sin_a);
    CHECK(std::abs(res.max_length - best) < 1e-9);

    const double grid_resolution = std::sqrt(4.0 * std::numbers::pi / 10000.0);
    for (const auto& s : res.states) {
        const double angle_to_v = std::acos(std::min(1.0, std::abs(s.input.v)));
        CHECK(angle_to_v < grid_resolution);
        CHECK(std::abs(s.input.w + sin_a) < 1e-6);
        CHECK(std::abs(s.output.norm() - best) < 1e-9);
        CHECK(std::abs(s.entropy - von_neumann_entropy(bloch_to_rho(s.output))) < 1e-12);
    }
    CHECK(res.states[0].input.v > 0.0);
    CHECK(res.states[1].input.v < 0.0);
}

TEST_CASE("minimal entropy falls as squeezing grows") {
    double last = 2.0;
    for (double M : {0.2, 0.6, 1.0, std::sqrt(2.0)}) {
        const auto res = minimal_entropy_states(rates_from_reservoir({1.0, 1.0, M, 0.0}), 1.0);
        REQUIRE(res.states.size() == 2);
        CHECK(res.states[0].entropy < last);
        last = res.states[0].entropy;
    }
}

TEST_CASE("thermal channel: optimum is a circle") {
    const auto res = minimal_entropy_states(rates_from_reservoir({1.0, 1.0, 0.0, 0.0}), 1.0);
    CHECK(res.degenerate);
    REQUIRE(res.states.size() >= 8);
    for (const auto& s : res.states) {
        CHECK(std::abs(s.entropy - res.states[0].entropy) < 1e-9);
        CHECK(std::abs(s.input.w - res.states[0].input.w) < 1e-6);
    }
}

TEST_CASE("identity channel: every pure input is optimal") {
    const auto res = minimal_entropy_states(svc_rates(), 0.0);
    CHECK(res.degenerate);
    CHECK(res.max_length == doctest::Approx(1.0));
    for (const auto& s : res.states) CHECK(s.entropy < 1e-9);
}

TEST_CASE("surface sampler rows") {
    const auto rows = ellipsoid_surface_rows(svc_rates(), {0.0, 0.5, 1.0}, 100);
    CHECK(rows.size() == 300);
    const Ellipsoid e = image_ellipsoid(affine_map(svc_rates(), 0.5));
    for (std::size_t i = 100; i < 200; ++i) {
        CHECK(rows[i][0] == 0.5);
        CHECK(std::abs(e.surface_residual({rows[i][1], rows[i][2], rows[i][3]})) < 1e-10);
    }
}

TEST_CASE("binary entropy") {
    CHECK(entropy_from_bloch_length(0.0) == 1.0);
    CHECK(entropy_from_bloch_length(1.0) == 0.0);
    CHECK(std::abs(entropy_from_bloch_length(-kShift3) - 0.9263710837698891) < 1e-14);
}
