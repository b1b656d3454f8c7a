#pragma once

#include <array>
#include <vector>

#include "qmc/channels.hpp"
#include "qmc/matrix.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// Qubit Lindbladian in the general form
///   L_D rho = 1/2 sum_ij c_ij ([F_i, rho F_j^+] + [F_i rho, F_j^+])
/// with the fixed operator set F = {sigma, sigma^+, sigma_z / sqrt(2)} and
/// the coherent part -i[H, rho], H = (omega / 2)(sigma^+ + sigma).
struct LindbladSpec {
    std::array<std::array<cplx, 3>, 3> c{};
    std::array<CMat, 3> F{CMat(2), CMat(2), CMat(2)};
    CMat H{CMat(2)};
};

LindbladSpec build_spec(const RateParams& r);

/// Dissipator from the four-term qubit display (amplitude terms, pure
/// dephasing and the squeezing term -1/T3 (s+ rho s+ + s rho s)).
/// The CMat overload is the linear superoperator on arbitrary 2x2 matrices.
CMat dissipator_apply(const RateParams& r, const CMat& x);
CMat dissipator_apply(const RateParams& r, const QubitState& rho);

/// -i[H, x] + L_D x
CMat liouville_apply(const RateParams& r, const CMat& x);
CMat liouville_apply(const RateParams& r, const QubitState& rho);

/// Dissipator evaluated from the generic c_ij / F_i double sum; an
/// independent route to dissipator_apply.
CMat dissipator_from_spec(const LindbladSpec& spec, const CMat& x);

/// Ascending eigenvalues of the 3x3 c-matrix.
std::vector<double> c_matrix_eigenvalues(const LindbladSpec& spec);

/// True when every eigenvalue of c is >= -1e-12.
bool c_matrix_positive(const LindbladSpec& spec);

}  // namespace qmc
