#pragma once

#include <array>

#include "qmc/channels.hpp"
#include "qmc/matrix.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// Biorthogonal left/right eigenoperators of the qubit dissipator,
/// Tr(L_i R_j) = delta_ij and L_D R_i = lambda_i R_i.
///
/// A state is carried as the coefficient vector l_i = Tr(L_i rho) and
/// rebuilt as rho = sum_i l_i R_i. Every 4x4 matrix in this module acts on
/// that vector.
struct DampingBasis {
    std::array<CMat, 4> L{CMat(2), CMat(2), CMat(2), CMat(2)};
    std::array<CMat, 4> R{CMat(2), CMat(2), CMat(2), CMat(2)};
    std::array<double, 4> lambda{};
};

/// Diagonal Bloch map b -> Lambda b + shift.
struct AffineMap {
    std::array<double, 3> Lambda{1.0, 1.0, 1.0};
    std::array<double, 3> shift{0.0, 0.0, 0.0};
    double w_eq = 0.0;
};

/// exp(L t) in the damping basis.
struct Propagator {
    CMat m{CMat(4)};
    double t = 0.0;
};

/// Eigenoperators and eigenvalues of the dissipator (omega is ignored).
DampingBasis damping_basis(const RateParams& r);

/// Coefficients l_i = Tr(L_i x) of an arbitrary 2x2 matrix.
std::array<cplx, 4> basis_coefficients(const DampingBasis& b, const CMat& x);
CMat from_coefficients(const DampingBasis& b, const std::array<cplx, 4>& l);

/// Full Liouvillian (dissipation plus the Rabi drive) acting on the
/// coefficient vector.
CMat generator_matrix(const RateParams& r);

/// exp(generator_matrix(r) t). Throws DomainError for t < 0.
Propagator propagator(const RateParams& r, double t);

/// Applies a propagator to an arbitrary 2x2 matrix.
CMat propagate(const DampingBasis& b, const Propagator& p, const CMat& x);

/// Diagonal damping matrix and shift of the omega = 0 map at time t.
/// Throws DomainError for t < 0 or omega != 0.
AffineMap affine_map(const RateParams& r, double t);

/// Closed-form image of an arbitrary 2x2 matrix under the diagonal map;
/// the linear extension of the density-matrix formula.
CMat affine_apply(const AffineMap& m, const CMat& x);

/// Phi(rho) at time t: the closed form when omega = 0, otherwise the
/// propagator path.
QubitState channel_apply(const RateParams& r, double t, const QubitState& rho);

/// Phi(x) = sum_i Tr(L_i x) exp(lambda_i t) R_i, term by term (omega = 0).
CMat damping_expansion_apply(const RateParams& r, double t, const CMat& x);

/// Phi(rho) through the matrix exponential of the generator, any omega.
QubitState channel_apply_propagator(const RateParams& r, double t, const QubitState& rho);

/// Phi(I) = diag(1 + w_eq(1 - Lambda3), 1 - w_eq(1 - Lambda3)).
CMat phi_of_identity(const RateParams& r, double t);

/// Lambda_i = exp(lambda_i t) for i = 1..3.
std::array<double, 3> damping_eigenvalues(const RateParams& r, double t);

}  // namespace qmc
