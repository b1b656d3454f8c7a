#pragma once

#include <array>
#include <string>
#include <vector>

#include "qmc/channels.hpp"
#include "qmc/matrix.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// Two-qubit density matrix in the ordering |ee>, |eg>, |ge>, |gg>
/// (A is the left factor).
class TwoQubitState {
public:
    /// Validates Hermiticity and unit trace to 1e-12 and eigenvalues
    /// >= -1e-10. Throws DomainError otherwise.
    explicit TwoQubitState(const CMat& rho);

    static TwoQubitState trusted(const CMat& rho);

    const CMat& matrix() const { return rho_; }

private:
    struct Trusted {};
    TwoQubitState(const CMat& rho, Trusted) : rho_(rho) {}

    CMat rho_;
};

/// (|ee> + |gg>)(<ee| + <gg|) / 2
TwoQubitState bell_state();

/// (1 x Phi)(rho_ab): the channel acts on each 2x2 block of B.
/// Any omega; t < 0 throws DomainError.
TwoQubitState extend_channel(const RateParams& r, double t, const TwoQubitState& rho_ab);

/// Transpose of every 2x2 B block.
CMat partial_transpose_b(const TwoQubitState& rho_ab);
CMat partial_transpose_b(const CMat& rho_ab);

/// Reduced state of A.
CMat partial_trace_b(const CMat& rho_ab);

/// Closed-form eigenvalues (e1, e2, e3, e4) of the partial transpose of the
/// Bell state sent through the omega = 0 channel:
///   e1,e2 = (1 + L3 -+ sqrt((L1 - L2)^2 + s^2)) / 4
///   e3,e4 = (1 - L3 -+ sqrt((L1 + L2)^2 + s^2)) / 4,  s = w_eq (1 - L3).
/// Only e3 can be negative.
std::array<double, 4> pt_eigenvalues_closed(const RateParams& r, double t);

/// e3 < -1e-12.
bool is_nonseparable(const RateParams& r, double t);

/// Time at which e3 crosses zero. The bracket [0, 50 / min|lambda_i|] is
/// sampled for the first sign change, bisected to 1e-10, and e3 is then
/// checked positive on samples past the root. Throws DomainError when
/// there is no sign change or e3 turns negative again.
double critical_time(const RateParams& r);

struct E3Row {
    std::string label;
    double t = 0.0;
    double e3 = 0.0;
};

struct LabeledRates {
    std::string label;
    RateParams rates;
};

/// Rows (label, t, e3) for every member of `family` over the ascending grid.
std::vector<E3Row> e3_curve(const std::vector<LabeledRates>& family, const std::vector<double>& t_grid);

/// Squeezed-vacuum family at fixed N: M = 0, 0.8 M_max and M_max with
/// labels "M=0", "M=0.8Mmax", "M=Mmax".
std::vector<LabeledRates> squeezing_family(double A, double N);

}  // namespace qmc
