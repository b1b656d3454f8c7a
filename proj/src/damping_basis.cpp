#include "qmc/damping_basis.hpp"

#include <cmath>

#include "qmc/error.hpp"

namespace qmc {

namespace {

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
}

}  // namespace

DampingBasis damping_basis(const RateParams& r) {
    const cplx k = 1.0 / std::sqrt(2.0);
    const CMat id = ops::identity2();
    const CMat sm = ops::sigma_minus();
    const CMat sp = ops::sigma_plus();
    const CMat sz = ops::sigma_z();
    const cplx w = r.w_eq;

    DampingBasis b;
    b.L = {id * k, (sp + sm) * k, (sp - sm) * k, (sz - id * w) * k};
    b.R = {(id + sz * w) * k, (sp + sm) * k, (sm - sp) * k, sz * k};
    b.lambda = {0.0, -(r.inv_T2 + r.inv_T3), -(r.inv_T2 - r.inv_T3), -r.inv_T1};
    return b;
}

std::array<cplx, 4> basis_coefficients(const DampingBasis& b, const CMat& x) {
    std::array<cplx, 4> l{};
    for (std::size_t i = 0; i < 4; ++i) l[i] = (b.L[i] * x).trace();
    return l;
}

CMat from_coefficients(const DampingBasis& b, const std::array<cplx, 4>& l) {
    CMat x(2);
    for (std::size_t i = 0; i < 4; ++i) x += b.R[i] * l[i];
    return x;
}

CMat generator_matrix(const RateParams& r) {
    const DampingBasis b = damping_basis(r);
    CMat g = CMat::diag({b.lambda[0], b.lambda[1], b.lambda[2], b.lambda[3]});
    const cplx minus_i(0.0, -1.0);
    g(2, 0) = minus_i * r.w_eq * r.omega;
    g(2, 3) = minus_i * r.omega;
    g(3, 2) = minus_i * r.omega;
    return g;
}

Propagator propagator(const RateParams& r, double t) {
    require_time(t);
    return {mat_exp(generator_matrix(r) * cplx(t)), t};
}

CMat propagate(const DampingBasis& b, const Propagator& p, const CMat& x) {
    const auto l = basis_coefficients(b, x);
    std::array<cplx, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out[i] += p.m(i, j) * l[j];
    return from_coefficients(b, out);
}

std::array<double, 3> damping_eigenvalues(const RateParams& r, double t) {
    require_time(t);
    const DampingBasis b = damping_basis(r);
    return {std::exp(b.lambda[1] * t), std::exp(b.lambda[2] * t), std::exp(b.lambda[3] * t)};
}

AffineMap affine_map(const RateParams& r, double t) {
    require_time(t);
    if (r.omega != 0.0) throw DomainError("the diagonal affine map requires omega = 0");
    AffineMap m;
    m.Lambda = damping_eigenvalues(r, t);
    m.shift = {0.0, 0.0, r.w_eq * (1.0 - m.Lambda[2])};
    m.w_eq = r.w_eq;
    return m;
}

CMat affine_apply(const AffineMap& m, const CMat& x) {
    const auto [l1, l2, l3] = m.Lambda;
    const double w = m.w_eq;
    const cplx a = x(0, 0);
    const cplx c = x(1, 1);
    const cplx d = x(0, 1);
    const cplx d_low = x(1, 0);  // d* for Hermitian input

    const cplx pop = 0.5 * l3 * (a - c - w * (a + c));
    CMat out(2);
    out(0, 0) = 0.5 * (a + c) * (1.0 + w) + pop;
    out(1, 1) = 0.5 * (a + c) * (1.0 - w) - pop;
    out(0, 1) = 0.5 * (d_low * (l1 - l2) + d * (l1 + l2));
    out(1, 0) = 0.5 * (d * (l1 - l2) + d_low * (l1 + l2));
    return out;
}

QubitState channel_apply(const RateParams& r, double t, const QubitState& rho) {
    require_time(t);
    if (r.omega != 0.0) return channel_apply_propagator(r, t, rho);
    return QubitState::trusted(affine_apply(affine_map(r, t), rho.matrix()));
}

CMat damping_expansion_apply(const RateParams& r, double t, const CMat& x) {
    require_time(t);
    const DampingBasis b = damping_basis(r);
    CMat out(2);
    for (std::size_t i = 0; i < 4; ++i) out += b.R[i] * ((b.L[i] * x).trace() * std::exp(b.lambda[i] * t));
    return out;
}

QubitState channel_apply_propagator(const RateParams& r, double t, const QubitState& rho) {
    const Propagator p = propagator(r, t);
    CMat out = propagate(damping_basis(r), p, rho.matrix());
    // Restore exact Hermiticity lost to rounding in the exponential.
    out = (out + out.adjoint()) * cplx(0.5);
    return QubitState::trusted(out);
}

CMat phi_of_identity(const RateParams& r, double t) {
    require_time(t);
    if (r.omega != 0.0) {
        return channel_apply_propagator(r, t, QubitState()).matrix() * cplx(2.0);
    }
    const double s = r.w_eq * (1.0 - damping_eigenvalues(r, t)[2]);
    return CMat::diag({1.0 + s, 1.0 - s});
}

}  // namespace qmc
