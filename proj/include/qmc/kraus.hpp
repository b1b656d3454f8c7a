#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qmc/channels.hpp"
#include "qmc/damping_basis.hpp"
#include "qmc/matrix.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// Operator-sum representation Phi(rho) = sum_k A_k^+ rho A_k with
/// completeness sum_k A_k A_k^+ = I.
struct KrausSet {
    std::vector<CMat> ops;
    double completeness_residual = 0.0;  ///< ||sum_k A_k A_k^+ - I||_max

    KrausSet() = default;
    explicit KrausSet(std::vector<CMat> operators);
};

/// Result of the four sign-pattern tests +-L1 +-L2 +-L3 <= 1, ordered
/// (++-), (+-+), (-++), (---). slack[i] = 1 - sum[i].
struct CpReport {
    bool pass = false;
    std::array<double, 4> slack{};
};

CpReport cp_inequalities(const std::array<double, 3>& Lambda);

/// |1/T3| <= |1/T2| together with the c-matrix bound c11 c22 >= c12^2,
/// which for reservoir rates reads M^2 <= N(N+1).
bool t3_bound_check(const RateParams& r);

/// Pauli-basis constants of the four-operator decomposition
///   A1 = m10 I + m13 sz,  A2 = m21 sx + m22 sy,  A3 = m31 sx,  A4 = m40 I.
struct SvcKrausConstants {
    double m10 = 0.0;
    double m21 = 0.0;
    cplx m22 = 0.0;
    double m13 = 0.0;
    double m40 = 0.0;
    double m31 = 0.0;
};

/// Constants for a map with contractions Lambda and shift (0, 0, s3).
/// Empty for the identity map. Throws CompletePositivityError when a
/// radicand is below -1e-12.
std::optional<SvcKrausConstants> svc_kraus_constants(const AffineMap& m);

/// Four-operator decomposition of a diagonal map with a w-axis shift;
/// the identity map gives the single operator {I}.
KrausSet svc_kraus(const AffineMap& m);

CMat apply_kraus(const KrausSet& k, const CMat& x);
QubitState apply_kraus(const KrausSet& k, const QubitState& rho);

/// {sqrt((1+L)/2) I, sqrt((1-L)/2) sz}. Throws DomainError unless 0 <= L <= 1.
KrausSet phase_damping_kraus(double Lambda);

/// Residuals of the bilinear relations between the Pauli coefficient
/// vectors of at most four Kraus operators and the map they must realize:
/// [0..3] normalisation and the three shifts, [4..12] the coefficient
/// equations, [13] the identity condition.
struct AppendixReport {
    std::array<double, 14> residuals{};
    double max_residual = 0.0;
};

AppendixReport verify_appendix_equations(const KrausSet& k, const AffineMap& m);

/// Coefficients m[k][j] with A_k = sum_j m[k][j] sigma_j (sigma_0 = I).
std::array<cplx, 4> pauli_coefficients(const CMat& a);

}  // namespace qmc
