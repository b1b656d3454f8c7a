#include "qmc/channels.hpp"

#include <cmath>
#include <string>

#include "qmc/error.hpp"

namespace qmc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void ReservoirParams::validate() const {
    require(finite(A) && finite(N) && finite(M) && finite(omega), "reservoir parameters must be finite");
    require(A > 0.0, "A must be positive");
    require(N >= 0.0, "N must be non-negative");
    require(M >= 0.0, "M must be non-negative");
    require(omega >= 0.0, "omega must be non-negative");
    // M = sqrt(N(N+1)) itself must pass, so allow rounding in the square.
    if (M * M > N * (N + 1.0) * (1.0 + 1e-12) + 1e-15) {
        throw CompletePositivityError("complete positivity violated: M^2 > N(N+1)");
    }
}

void RateParams::validate() const {
    require(finite(inv_T1) && finite(inv_T2) && finite(inv_T3) && finite(w_eq) && finite(omega),
            "rate parameters must be finite");
    require(inv_T1 >= 0.0, "inv_T1 must be non-negative");
    require(inv_T2 >= 0.0, "inv_T2 must be non-negative");
    require(std::abs(inv_T3) <= inv_T2 * (1.0 + 1e-12), "|inv_T3| must not exceed inv_T2");
    require(w_eq >= -1.0 && w_eq <= 0.0, "w_eq must lie in [-1, 0]");
    require(omega >= 0.0, "omega must be non-negative");
}

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return "amplitude_damping";
        case ChannelKind::PhaseDamping: return "phase_damping";
        case ChannelKind::ThermalField: return "thermal";
        case ChannelKind::SqueezedVacuum: return "svc";
        case ChannelKind::Custom: return "custom";
    }
    return "unknown";
}

RateParams rates_from_reservoir(const ReservoirParams& p) {
    p.validate();
    RateParams r;
    r.inv_T1 = 2.0 * p.A * (p.N + 0.5);
    r.inv_T2 = p.A * (p.N + 0.5);
    r.inv_T3 = p.A * p.M;
    r.w_eq = -1.0 / (2.0 * p.N + 1.0);
    r.omega = p.omega;
    return r;
}

RateParams named_channel(ChannelKind kind, const ChannelParams& p) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            return rates_from_reservoir({p.A, 0.0, 0.0, p.omega});
        case ChannelKind::PhaseDamping: {
            require(finite(p.gamma) && p.gamma >= 0.0, "Gamma must be non-negative");
            RateParams r{0.0, p.gamma, 0.0, 0.0, p.omega};
            r.validate();
            return r;
        }
        case ChannelKind::ThermalField:
            return rates_from_reservoir({p.A, p.N, 0.0, p.omega});
        case ChannelKind::SqueezedVacuum:
            return rates_from_reservoir({p.A, p.N, p.M, p.omega});
        case ChannelKind::Custom:
            break;
    }
    throw DomainError("custom channels are specified by their rates directly");
}

BlochRates bloch_rates(const RateParams& r) {
    return {r.inv_T2 + r.inv_T3, r.inv_T2 - r.inv_T3, r.inv_T1};
}

double max_squeezing(double N) { return std::sqrt(N * (N + 1.0)); }

}  // namespace qmc
