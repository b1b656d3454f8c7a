#pragma once

#include "qmc/channels.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// Fixed-step classical RK4. The last step is shortened so the
/// trajectory ends exactly at t_end.
struct IntegratorConfig {
    double dt = 1e-3;
    double t_end = 0.0;

    /// Throws DomainError unless dt > 0 and t_end >= 0 (both finite).
    void validate() const;
};

/// Bloch equations with optional detuning:
///   du/dt = -u/Tu - detuning v
///   dv/dt = -v/Tv + detuning u - omega w
///   dw/dt = -(w - w_eq)/Tw + omega v
BlochVector integrate_bloch(const RateParams& r, const BlochVector& b0, const IntegratorConfig& cfg,
                            double detuning = 0.0);

/// Master equation d rho/dt = liouville_apply(r, rho).
QubitState integrate_master(const RateParams& r, const QubitState& rho0, const IntegratorConfig& cfg);

}  // namespace qmc
