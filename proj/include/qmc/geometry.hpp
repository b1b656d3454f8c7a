#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qmc/channels.hpp"
#include "qmc/damping_basis.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// u = 2 Re rho_eg, v = -2 Im rho_eg, w = rho_ee - rho_gg.
BlochVector rho_to_bloch(const QubitState& rho);
BlochVector rho_to_bloch(const CMat& rho);

/// Throws DomainError when |b| > 1 + 1e-12.
QubitState bloch_to_rho(const BlochVector& b);

/// Image of the pure-state sphere under a diagonal affine map:
/// sum_i ((x_i - center_i) / semi_axes_i)^2 = 1.
struct Ellipsoid {
    std::array<double, 3> semi_axes{1.0, 1.0, 1.0};
    std::array<double, 3> center{0.0, 0.0, 0.0};

    /// Left-hand side of the surface equation minus one.
    double surface_residual(const BlochVector& p) const;
};

/// Throws DomainError when a contraction vanishes (flattened ellipsoid).
Ellipsoid image_ellipsoid(const AffineMap& m);

BlochVector apply_affine(const AffineMap& m, const BlochVector& b);

/// General affine action b -> T b + c of a qubit channel on Bloch vectors.
struct BlochAffine {
    std::array<std::array<double, 3>, 3> T{};
    std::array<double, 3> c{};

    BlochVector operator()(const BlochVector& b) const;
};

/// Bloch-space form of the channel at time t, any omega.
BlochAffine bloch_affine(const RateParams& r, double t);

/// n points of a spherical Fibonacci lattice (deterministic, low discrepancy).
std::vector<BlochVector> fibonacci_sphere(std::size_t n);

/// Binary entropy, in bits, of a qubit state with Bloch length `length`.
double entropy_from_bloch_length(double length);

struct MinimalEntropyState {
    BlochVector input;
    BlochVector output;
    double entropy = 0.0;
};

struct MinimalEntropyResult {
    std::vector<MinimalEntropyState> states;
    double max_length = 0.0;
    /// True when the optimum is a continuum (circle or whole sphere);
    /// `states` then holds evenly chosen representatives.
    bool degenerate = false;
};

/// Pure inputs whose outputs are purest: Bloch length is maximised over a
/// Fibonacci grid of `grid_points`, then refined locally to 1e-8 rad.
MinimalEntropyResult minimal_entropy_states(const RateParams& r, double t, std::size_t grid_points = 10000);

/// Rows (t, u, v, w): images of `points` sphere samples at each time.
std::vector<std::array<double, 4>> ellipsoid_surface_rows(const RateParams& r, const std::vector<double>& times,
                                                          std::size_t points);

}  // namespace qmc
