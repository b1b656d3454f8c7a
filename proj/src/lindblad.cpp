#include "qmc/lindblad.hpp"

#include <cmath>

namespace qmc {

namespace {

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

}  // namespace

LindbladSpec build_spec(const RateParams& r) {
    LindbladSpec s;
    const double half_t1 = 0.5 * r.inv_T1;
    s.c[0][0] = half_t1 * (1.0 - r.w_eq);
    s.c[0][1] = -r.inv_T3;
    s.c[1][0] = -r.inv_T3;
    s.c[1][1] = half_t1 * (1.0 + r.w_eq);
    s.c[2][2] = r.inv_T2 - half_t1;
    s.F = {ops::sigma_minus(), ops::sigma_plus(), ops::sigma_z() * cplx(1.0 / std::sqrt(2.0))};
    s.H = (ops::sigma_plus() + ops::sigma_minus()) * cplx(0.5 * r.omega);
    return s;
}

CMat dissipator_apply(const RateParams& r, const CMat& x) {
    const CMat sm = ops::sigma_minus();
    const CMat sp = ops::sigma_plus();
    const CMat sz = ops::sigma_z();
    const CMat pe = sp * sm;  // |e><e|
    const CMat pg = sm * sp;  // |g><g|

    const double down = 0.25 * r.inv_T1 * (1.0 - r.w_eq);
    const double up = 0.25 * r.inv_T1 * (1.0 + r.w_eq);
    const double dephase = 0.5 * r.inv_T2 - 0.25 * r.inv_T1;

    CMat out = (pe * x + x * pe - cplx(2.0) * (sm * x * sp)) * cplx(-down);
    out -= (pg * x + x * pg - cplx(2.0) * (sp * x * sm)) * cplx(up);
    out -= (x - sz * x * sz) * cplx(dephase);
    out -= (sp * x * sp + sm * x * sm) * cplx(r.inv_T3);
    return out;
}

CMat dissipator_apply(const RateParams& r, const QubitState& rho) { return dissipator_apply(r, rho.matrix()); }

CMat liouville_apply(const RateParams& r, const CMat& x) {
    const CMat h = (ops::sigma_plus() + ops::sigma_minus()) * cplx(0.5 * r.omega);
    return commutator(h, x) * cplx(0.0, -1.0) + dissipator_apply(r, x);
}

CMat liouville_apply(const RateParams& r, const QubitState& rho) { return liouville_apply(r, rho.matrix()); }

CMat dissipator_from_spec(const LindbladSpec& spec, const CMat& x) {
    CMat out(2);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const cplx cij = spec.c[i][j];
            if (cij == cplx(0.0)) continue;
            const CMat fj_dag = spec.F[j].adjoint();
            out += (commutator(spec.F[i], x * fj_dag) + commutator(spec.F[i] * x, fj_dag)) * (0.5 * cij);
        }
    }
    return out;
}

std::vector<double> c_matrix_eigenvalues(const LindbladSpec& spec) {
    std::array<cplx, 9> flat{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) flat[i * 3 + j] = spec.c[i][j];
    return detail::hermitian_eigenvalues(flat, 3);
}

bool c_matrix_positive(const LindbladSpec& spec) { return c_matrix_eigenvalues(spec).front() >= -1e-12; }

}  // namespace qmc
