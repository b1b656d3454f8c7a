#pragma once

#include <string>
#include <string_view>

namespace qmc {

/// Reservoir description of a two-level atom in a (possibly squeezed)
/// broadband vacuum. Time is measured in units of 1/A.
struct ReservoirParams {
    double A = 1.0;      ///< Einstein coefficient (inverse time)
    double N = 0.0;      ///< mean photon number
    double M = 0.0;      ///< squeezing parameter, taken real and non-negative
    double omega = 0.0;  ///< Rabi frequency (inverse time)

    /// Throws DomainError for a negative or non-finite field and
    /// CompletePositivityError when M^2 > N(N+1).
    void validate() const;
};

/// Phenomenological decay rates of the Bloch equations.
struct RateParams {
    double inv_T1 = 0.0;
    double inv_T2 = 0.0;
    double inv_T3 = 0.0;
    double w_eq = 0.0;   ///< equilibrium inversion, in [-1, 0]
    double omega = 0.0;  ///< Rabi frequency

    /// Throws DomainError unless inv_T1, inv_T2 >= 0, |inv_T3| <= inv_T2,
    /// -1 <= w_eq <= 0 and omega >= 0.
    void validate() const;
};

struct BlochRates {
    double inv_Tu = 0.0;
    double inv_Tv = 0.0;
    double inv_Tw = 0.0;
};

enum class ChannelKind { AmplitudeDamping, PhaseDamping, ThermalField, SqueezedVacuum, Custom };

std::string_view to_string(ChannelKind kind);

/// Union of the parameters used by the named channel templates; each kind
/// reads only the fields it needs.
struct ChannelParams {
    double A = 1.0;
    double N = 0.0;
    double M = 0.0;
    double gamma = 0.0;  ///< phase-damping rate
    double omega = 0.0;
};

/// 1/T1 = 2A(N+1/2), 1/T2 = A(N+1/2), 1/T3 = AM, w_eq = -1/(2N+1).
RateParams rates_from_reservoir(const ReservoirParams& p);

/// Rate template of a named channel. Custom has no template and throws.
RateParams named_channel(ChannelKind kind, const ChannelParams& p);

/// (1/T2 + 1/T3, 1/T2 - 1/T3, 1/T1)
BlochRates bloch_rates(const RateParams& r);

/// Largest squeezing allowed by complete positivity, sqrt(N(N+1)).
double max_squeezing(double N);

}  // namespace qmc
