#include "qmc/state.hpp"

#include <cmath>
#include <string>

#include "qmc/error.hpp"

namespace qmc {

double BlochVector::norm() const { return std::sqrt(u * u + v * v + w * w); }

void require_density_matrix(const CMat& rho, double tol) {
    if (!rho.is_hermitian(tol)) throw DomainError("density matrix is not Hermitian");
    const cplx tr = rho.trace();
    if (std::abs(tr - 1.0) > tol) {
        throw DomainError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    const auto ev = herm_eigvals(rho);
    if (ev.front() < -tol) {
        throw DomainError("density matrix has negative eigenvalue " + std::to_string(ev.front()));
    }
}

QubitState::QubitState() : rho_(CMat::identity(2) * cplx(0.5)) {}

QubitState::QubitState(const CMat& rho) : rho_(rho) {
    if (rho.dim() != 2) throw DomainError("qubit state must be 2x2");
    require_density_matrix(rho);
}

QubitState QubitState::trusted(const CMat& rho) { return QubitState(rho, Trusted{}); }

}  // namespace qmc
