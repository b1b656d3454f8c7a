#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qmc/capacity.hpp"
#include "qmc/error.hpp"
#include "qmc/geometry.hpp"
#include "test_support.hpp"

using namespace qmc;
using namespace qmc::testing;

namespace {

// Binary-entropy values for the reference channel at t = 1, from an
// independent script: average output has Bloch length |s3|, each v-axis
// output has length sqrt(L2^2 + s3^2).
constexpr double kAverageEntropy = 0.9263710837698891;
constexpr double kOutputEntropy = 0.10961084912889484;
constexpr double kPairChi = 0.8167602346409942;

double angle(const BlochVector& a, const BlochVector& b) {
    return std::acos(std::clamp(a.u * b.u + a.v * b.v + a.w * b.w, -1.0, 1.0));
}

}  // namespace

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(QubitState()) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(von_neumann_entropy(QubitState(CMat::diag({1.0, 0.0}))) == 0.0);
    CHECK(std::abs(von_neumann_entropy(bloch_to_rho({0.0, 0.0, kShift3})) - kAverageEntropy) < 1e-13);
    CHECK(von_neumann_entropy(bloch_to_rho({0.0, 0.0, 0.316738})) == doctest::Approx(0.926370).epsilon(1e-6));
}

TEST_CASE("ensemble validation") {
    CHECK_THROWS_AS(Ensemble({}), DomainError);
    CHECK_THROWS_AS(Ensemble({{0.6, {1, 0, 0}}, {0.6, {-1, 0, 0}}}), DomainError);
    CHECK_THROWS_AS(Ensemble(std::vector<EnsembleMember>{{1.0, {0.5, 0, 0}}}), DomainError);
    CHECK_THROWS_AS(Ensemble({{-0.5, {1, 0, 0}}, {1.5, {-1, 0, 0}}}), DomainError);
    std::vector<EnsembleMember> five(5, EnsembleMember{0.2, {0, 0, 1}});
    CHECK_THROWS_AS(Ensemble{five}, DomainError);
}

TEST_CASE("Holevo quantity") {
    const Ensemble z_pair({{0.5, {0, 0, 1}}, {0.5, {0, 0, -1}}});
    CHECK(holevo_quantity(svc_rates(), 0.0, z_pair) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(holevo_quantity(svc_rates(), 1.0, Ensemble(std::vector<EnsembleMember>{{1.0, {0.6, 0.0, 0.8}}}))) < 1e-14);
    CHECK(std::abs(holevo_quantity(svc_rates(), 1.0, v_axis_pair()) - kPairChi) < 1e-13);
    CHECK(holevo_quantity(svc_rates(), 1.0, v_axis_pair()) == doctest::Approx(0.816759).epsilon(1e-6));
}

TEST_CASE("Holevo quantity is non-negative") {
    for (int k = 0; k < 200; ++k) {
        const RateParams r = rates_from_reservoir(random_reservoir());
        std::vector<EnsembleMember> members;
        const int n = 1 + static_cast<int>(uniform(0.0, 3.999));
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            members.push_back({uniform(), random_unit_bloch()});
            total += members.back().p;
        }
        for (auto& m : members) m.p /= total;
        CHECK(holevo_quantity(r, uniform(0.0, 3.0), Ensemble(members)) >= -1e-12);
    }
}

TEST_CASE("capacity of the identity channel") {
    const CapacityResult c = holevo_capacity(svc_rates(), 0.0);
    CHECK(c.C == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(c.degenerate);
}

TEST_CASE("capacity of the reference channel") {
    const CapacityResult two = holevo_capacity(svc_rates(), 1.0, 2);
    CHECK(two.C >= kPairChi);
    CHECK(two.C == doctest::Approx(0.8168870275204252).epsilon(1e-6));
    CHECK_FALSE(two.degenerate);
    REQUIRE(two.ensemble.members().size() == 2);
    const auto& m = two.ensemble.members();
    const BlochVector plus_v{0, 1, 0}, minus_v{0, -1, 0};
    const bool direct = angle(m[0].b, plus_v) < 1e-2 && angle(m[1].b, minus_v) < 1e-2;
    const bool swapped = angle(m[0].b, minus_v) < 1e-2 && angle(m[1].b, plus_v) < 1e-2;
    CHECK((direct || swapped));
    CHECK(std::abs(m[0].p - 0.5) < 1e-2);

    const CapacityResult four = holevo_capacity(svc_rates(), 1.0, 4);
    CHECK(std::abs(four.C - two.C) < 1e-6);

    CHECK_THROWS_AS(holevo_capacity(svc_rates(), 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(holevo_capacity(svc_rates(), 1.0, 5), std::invalid_argument);
}

TEST_CASE("depolarizing channel: capacity depends only on the contraction") {
    for (double t : {0.3, 1.0}) {
        const RateParams depol{1.0, 1.0, 0.0, 0.0, 0.0};
        const double lam = std::exp(-t);
        const CapacityResult c = holevo_capacity(depol, t, 2);
        CHECK(c.degenerate);
        CHECK(std::abs(c.C - (1.0 - entropy_from_bloch_length(lam))) < 1e-6);
    }
}

TEST_CASE("capacity is reproducible") {
    const CapacityResult a = holevo_capacity(svc_rates(), 0.8, 3);
    const CapacityResult b = holevo_capacity(svc_rates(), 0.8, 3);
    CHECK(a.C == b.C);
    REQUIRE(a.ensemble.members().size() == b.ensemble.members().size());
    for (std::size_t i = 0; i < a.ensemble.members().size(); ++i) {
        CHECK(a.ensemble.members()[i].p == b.ensemble.members()[i].p);
        CHECK(a.ensemble.members()[i].b == b.ensemble.members()[i].b);
    }
}

TEST_CASE("capacity falls with time") {
    double last = 1.0 + 1e-9;
    for (int k = 0; k <= 12; ++k) {
        const double c = holevo_capacity(svc_rates(), 0.25 * k).C;
        CHECK(c <= last + 1e-6);
        last = c;
    }
}

TEST_CASE("capacity grows with squeezing") {
    double last = 0.0;
    for (double M : {0.0, 0.5, 1.0, std::sqrt(2.0)}) {
        const double c = holevo_capacity(rates_from_reservoir({1.0, 1.0, M, 0.0}), 1.0).C;
        CHECK(c >= last - 1e-6);
        last = c;
    }
}

TEST_CASE("capacity decomposition") {
    const CapacityDecomposition d = capacity_decomposition(svc_rates(), 1.0);
    CHECK(d.ideal == 1.0);
    CHECK(std::abs(d.shift_error - (1.0 - kAverageEntropy)) < 1e-13);
    CHECK(std::abs(d.mixing_error - kOutputEntropy) < 1e-13);
    CHECK(std::abs(d.capacity() - kPairChi) < 1e-13);
    CHECK(d.shift_error == doctest::Approx(0.073630).epsilon(1e-5));

    const CapacityDecomposition zero = capacity_decomposition(svc_rates(), 0.0);
    CHECK(std::abs(zero.shift_error) < 1e-15);
    CHECK(std::abs(zero.mixing_error) < 1e-15);

    const CapacityDecomposition pd = capacity_decomposition(RateParams{0.0, 1.0, 0.0, 0.0, 0.0}, 1.3);
    CHECK(pd.shift_error == 0.0);
}
