#pragma once

#include "qmc/matrix.hpp"

namespace qmc {

/// Bloch vector (u, v, w) of a qubit: rho = (I + u sx + v sy + w sz) / 2.
struct BlochVector {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;

    double norm() const;
    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// A qubit density matrix: 2x2, Hermitian, unit trace, positive semi-definite.
class QubitState {
public:
    static constexpr double kTolerance = 1e-10;

    /// Maximally mixed state.
    QubitState();

    /// Validates the matrix and throws DomainError when it is not a
    /// density matrix to kTolerance.
    explicit QubitState(const CMat& rho);

    /// Wraps a matrix already known to be a density matrix (channel outputs).
    static QubitState trusted(const CMat& rho);

    const CMat& matrix() const { return rho_; }
    cplx operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

private:
    struct Trusted {};
    QubitState(const CMat& rho, Trusted) : rho_(rho) {}

    CMat rho_;
};

/// Throws DomainError unless rho is a density matrix of either dimension.
void require_density_matrix(const CMat& rho, double tol = QubitState::kTolerance);

}  // namespace qmc
