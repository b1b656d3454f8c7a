#include <doctest.h>

#include <cmath>

#include "qmc/channels.hpp"
#include "qmc/error.hpp"
#include "test_support.hpp"

using namespace qmc;

TEST_CASE("rates_from_reservoir") {
    const RateParams r = rates_from_reservoir({1.0, 1.0, std::sqrt(2.0), 0.0});
    CHECK(r.inv_T1 == 3.0);
    CHECK(r.inv_T2 == 1.5);
    CHECK(r.inv_T3 == doctest::Approx(1.414214).epsilon(1e-6));
    CHECK(r.w_eq == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));

    const RateParams se = rates_from_reservoir({1.0, 0.0, 0.0, 0.0});
    CHECK(se.inv_T1 == 1.0);
    CHECK(se.inv_T2 == 0.5);
    CHECK(se.inv_T3 == 0.0);
    CHECK(se.w_eq == -1.0);

    CHECK_THROWS_AS(rates_from_reservoir({1.0, 1.0, std::sqrt(2.0) * 1.01, 0.0}), CompletePositivityError);
}

TEST_CASE("reservoir validation") {
    CHECK_THROWS_AS(ReservoirParams({0.0, 1.0, 0.0, 0.0}).validate(), DomainError);
    CHECK_THROWS_AS(ReservoirParams({1.0, -1.0, 0.0, 0.0}).validate(), DomainError);
    CHECK_THROWS_AS(ReservoirParams({1.0, 1.0, -0.5, 0.0}).validate(), DomainError);
    CHECK_THROWS_AS(ReservoirParams({1.0, 1.0, 0.0, -1.0}).validate(), DomainError);
    CHECK_NOTHROW(ReservoirParams({1.0, 2.0, max_squeezing(2.0), 0.0}).validate());
    try {
        ReservoirParams({1.0, 1.0, 1.5, 0.0}).validate();
        FAIL("expected a complete-positivity error");
    } catch (const CompletePositivityError& e) {
        CHECK(std::string(e.what()) == "complete positivity violated: M^2 > N(N+1)");
    }
}

TEST_CASE("named channels") {
    ChannelParams p;
    p.gamma = 2.0;
    const RateParams pd = named_channel(ChannelKind::PhaseDamping, p);
    CHECK(pd.inv_T1 == 0.0);
    CHECK(pd.inv_T2 == 2.0);
    CHECK(pd.inv_T3 == 0.0);
    CHECK(pd.w_eq == 0.0);

    ChannelParams th;
    th.A = 1.0;
    th.N = 0.0;
    const RateParams thermal0 = named_channel(ChannelKind::ThermalField, th);
    const RateParams amp = named_channel(ChannelKind::AmplitudeDamping, th);
    CHECK(thermal0.inv_T1 == amp.inv_T1);
    CHECK(thermal0.inv_T2 == amp.inv_T2);
    CHECK(thermal0.w_eq == amp.w_eq);

    ChannelParams sq;
    sq.N = 1.0;
    sq.M = 0.0;
    const RateParams svc0 = named_channel(ChannelKind::SqueezedVacuum, sq);
    const RateParams thermal1 = named_channel(ChannelKind::ThermalField, sq);
    CHECK(svc0.inv_T1 == thermal1.inv_T1);
    CHECK(svc0.inv_T2 == thermal1.inv_T2);
    CHECK(svc0.inv_T3 == thermal1.inv_T3);
    CHECK(svc0.w_eq == thermal1.w_eq);

    ChannelParams bad;
    bad.gamma = -1.0;
    CHECK_THROWS_AS(named_channel(ChannelKind::PhaseDamping, bad), DomainError);
    CHECK_THROWS_AS(named_channel(ChannelKind::Custom, p), DomainError);
}

TEST_CASE("bloch_rates") {
    const BlochRates b = bloch_rates(testing::svc_rates());
    CHECK(b.inv_Tu == doctest::Approx(2.914214).epsilon(1e-6));
    CHECK(b.inv_Tv == doctest::Approx(0.085786).epsilon(1e-5));
    CHECK(b.inv_Tw == 3.0);

    const BlochRates se = bloch_rates(rates_from_reservoir({1.0, 0.0, 0.0, 0.0}));
    CHECK(se.inv_Tu == 0.5);
    CHECK(se.inv_Tv == 0.5);
    CHECK(se.inv_Tw == 1.0);
}

TEST_CASE("reservoir family properties") {
    double last_w = -2.0;
    for (int k = 0; k < 200; ++k) {
        const ReservoirParams p = testing::random_reservoir();
        const RateParams r = rates_from_reservoir(p);
        CHECK(r.inv_T1 == 2.0 * r.inv_T2);
        CHECK(bloch_rates(r).inv_Tv >= 0.0);
        CHECK_NOTHROW(r.validate());
    }
    for (double N : {0.0, 0.1, 0.5, 1.0, 5.0, 50.0}) {
        const double w = rates_from_reservoir({1.0, N, 0.0, 0.0}).w_eq;
        CHECK(w > last_w);
        CHECK(w < 0.0);
        last_w = w;
    }
    CHECK(rates_from_reservoir({1.0, 0.0, 0.0, 0.0}).w_eq == -1.0);
}

TEST_CASE("channel kind names") {
    CHECK(to_string(ChannelKind::SqueezedVacuum) == "svc");
    CHECK(to_string(ChannelKind::PhaseDamping) == "phase_damping");
}
