#include "qmc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmc/damping_basis.hpp"
#include "qmc/error.hpp"

namespace qmc {

namespace {

CMat block(const CMat& m, std::size_t a, std::size_t a2) {
    CMat b(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(2 * a + i, 2 * a2 + j);
    return b;
}

void set_block(CMat& m, std::size_t a, std::size_t a2, const CMat& b) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(2 * a + i, 2 * a2 + j) = b(i, j);
}

void require_two_qubit(const CMat& m) {
    if (m.dim() != 4) throw std::invalid_argument("expected a 4x4 two-qubit matrix");
}

double e3_at(const RateParams& r, double t) { return pt_eigenvalues_closed(r, t)[2]; }

}  // namespace

TwoQubitState::TwoQubitState(const CMat& rho) : rho_(rho) {
    require_two_qubit(rho);
    if (!rho.is_hermitian(1e-12)) throw DomainError("two-qubit state is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-12) throw DomainError("two-qubit state must have unit trace");
    if (herm_eigvals(rho).front() < -1e-10) throw DomainError("two-qubit state has a negative eigenvalue");
}

TwoQubitState TwoQubitState::trusted(const CMat& rho) {
    require_two_qubit(rho);
    return TwoQubitState(rho, Trusted{});
}

TwoQubitState bell_state() {
    CMat m(4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return TwoQubitState::trusted(m);
}

TwoQubitState extend_channel(const RateParams& r, double t, const TwoQubitState& rho_ab) {
    const CMat& in = rho_ab.matrix();
    CMat out(4);
    if (r.omega == 0.0) {
        const AffineMap m = affine_map(r, t);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t a2 = 0; a2 < 2; ++a2) set_block(out, a, a2, affine_apply(m, block(in, a, a2)));
    } else {
        const DampingBasis basis = damping_basis(r);
        const Propagator p = propagator(r, t);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t a2 = 0; a2 < 2; ++a2) set_block(out, a, a2, propagate(basis, p, block(in, a, a2)));
        out = (out + out.adjoint()) * cplx(0.5);
    }
    return TwoQubitState::trusted(out);
}

CMat partial_transpose_b(const CMat& rho_ab) {
    require_two_qubit(rho_ab);
    CMat out(4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t a2 = 0; a2 < 2; ++a2) set_block(out, a, a2, block(rho_ab, a, a2).transpose());
    return out;
}

CMat partial_transpose_b(const TwoQubitState& rho_ab) { return partial_transpose_b(rho_ab.matrix()); }

CMat partial_trace_b(const CMat& rho_ab) {
    require_two_qubit(rho_ab);
    CMat out(2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t a2 = 0; a2 < 2; ++a2) out(a, a2) = block(rho_ab, a, a2).trace();
    return out;
}

std::array<double, 4> pt_eigenvalues_closed(const RateParams& r, double t) {
    const AffineMap m = affine_map(r, t);
    const auto [l1, l2, l3] = m.Lambda;
    const double s = r.w_eq * (1.0 - l3);
    const double rd = std::sqrt((l1 - l2) * (l1 - l2) + s * s);
    const double rs = std::sqrt((l1 + l2) * (l1 + l2) + s * s);
    return {0.25 * (1.0 + l3 - rd), 0.25 * (1.0 + l3 + rd), 0.25 * (1.0 - l3 - rs), 0.25 * (1.0 - l3 + rs)};
}

bool is_nonseparable(const RateParams& r, double t) { return e3_at(r, t) < -1e-12; }

double critical_time(const RateParams& r) {
    const DampingBasis b = damping_basis(r);
    double slowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < 4; ++i) {
        if (b.lambda[i] != 0.0) slowest = std::min(slowest, std::abs(b.lambda[i]));
    }
    if (!std::isfinite(slowest)) throw DomainError("critical_time: the channel does not decay");
    const double t_max = 50.0 / slowest;

    constexpr int kSamples = 20000;
    const double dt = t_max / kSamples;
    if (!(e3_at(r, 0.0) < 0.0)) throw DomainError("critical_time: e3 is not negative initially");

    int first_positive = -1;
    for (int k = 1; k <= kSamples; ++k) {
        if (e3_at(r, k * dt) >= 0.0) {
            first_positive = k;
            break;
        }
    }
    if (first_positive < 0) throw DomainError("critical_time: e3 does not change sign");

    double lo = (first_positive - 1) * dt, hi = first_positive * dt;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (e3_at(r, mid) < 0.0 ? lo : hi) = mid;
    }
    for (int k = first_positive + 1; k <= kSamples; ++k) {
        if (e3_at(r, k * dt) < 0.0) throw DomainError("critical_time: e3 turns negative again");
    }
    return 0.5 * (lo + hi);
}

std::vector<E3Row> e3_curve(const std::vector<LabeledRates>& family, const std::vector<double>& t_grid) {
    if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw std::invalid_argument("e3_curve: time grid must ascend");
    std::vector<E3Row> rows;
    rows.reserve(family.size() * t_grid.size());
    for (const auto& member : family)
        for (double t : t_grid) rows.push_back({member.label, t, e3_at(member.rates, t)});
    return rows;
}

std::vector<LabeledRates> squeezing_family(double A, double N) {
    const double m_max = max_squeezing(N);
    return {
        {"M=0", rates_from_reservoir({A, N, 0.0, 0.0})},
        {"M=0.8Mmax", rates_from_reservoir({A, N, 0.8 * m_max, 0.0})},
        {"M=Mmax", rates_from_reservoir({A, N, m_max, 0.0})},
    };
}

}  // namespace qmc
