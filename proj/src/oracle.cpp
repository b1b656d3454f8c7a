#include "qmc/oracle.hpp"

#include <array>
#include <cmath>

#include "qmc/error.hpp"
#include "qmc/lindblad.hpp"

namespace qmc {

namespace {

// Calls step(h) repeatedly until t_end is reached.
template <typename Step>
void march(const IntegratorConfig& cfg, Step&& step) {
    cfg.validate();
    const auto n = static_cast<long long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    if (n <= 0) return;
    const double h = cfg.t_end / static_cast<double>(n);
    for (long long k = 0; k < n; ++k) step(h);
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("integrator step must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw DomainError("integration time must be non-negative");
}

BlochVector integrate_bloch(const RateParams& r, const BlochVector& b0, const IntegratorConfig& cfg,
                            double detuning) {
    const BlochRates k = bloch_rates(r);
    using V = std::array<double, 3>;
    auto f = [&](const V& b) -> V {
        return {-k.inv_Tu * b[0] - detuning * b[1],
                -k.inv_Tv * b[1] + detuning * b[0] - r.omega * b[2],
                -k.inv_Tw * (b[2] - r.w_eq) + r.omega * b[1]};
    };
    auto axpy = [](const V& x, double a, const V& y) -> V { return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]}; };

    V b{b0.u, b0.v, b0.w};
    march(cfg, [&](double h) {
        const V k1 = f(b);
        const V k2 = f(axpy(b, 0.5 * h, k1));
        const V k3 = f(axpy(b, 0.5 * h, k2));
        const V k4 = f(axpy(b, h, k3));
        for (std::size_t i = 0; i < 3; ++i) b[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    });
    return {b[0], b[1], b[2]};
}

QubitState integrate_master(const RateParams& r, const QubitState& rho0, const IntegratorConfig& cfg) {
    CMat rho = rho0.matrix();
    march(cfg, [&](double h) {
        const CMat k1 = liouville_apply(r, rho);
        const CMat k2 = liouville_apply(r, rho + k1 * cplx(0.5 * h));
        const CMat k3 = liouville_apply(r, rho + k2 * cplx(0.5 * h));
        const CMat k4 = liouville_apply(r, rho + k3 * cplx(h));
        rho += (k1 + k2 * cplx(2.0) + k3 * cplx(2.0) + k4) * cplx(h / 6.0);
    });
    return QubitState::trusted(rho);
}

}  // namespace qmc
