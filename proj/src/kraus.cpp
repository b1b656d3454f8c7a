#include "qmc/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmc/error.hpp"

namespace qmc {

namespace {

constexpr double kRadicandTol = 1e-12;
constexpr double kSingular = 1e-14;

double checked_sqrt(double x, const char* name) {
    if (x < -kRadicandTol) {
        throw CompletePositivityError(std::string("complete positivity violated: negative radicand in ") + name);
    }
    return std::sqrt(std::max(x, 0.0));
}

// s^2 / q, with the 0/0 limit taken as 0 when the shift vanishes.
double shift_ratio(double s, double q, const char* name) {
    if (q > kSingular) return s * s / q;
    if (std::abs(s) <= kSingular) return 0.0;
    throw CompletePositivityError(std::string("complete positivity violated: shift with vanishing ") + name);
}

}  // namespace

KrausSet::KrausSet(std::vector<CMat> operators) : ops(std::move(operators)) {
    CMat sum(2);
    for (const auto& a : ops) sum += a * a.adjoint();
    completeness_residual = max_abs_diff(sum, CMat::identity(2));
}

CpReport cp_inequalities(const std::array<double, 3>& Lambda) {
    const auto [a, b, c] = Lambda;
    CpReport r;
    r.slack = {1.0 - (a + b - c), 1.0 - (a - b + c), 1.0 - (-a + b + c), 1.0 - (-a - b - c)};
    r.pass = std::all_of(r.slack.begin(), r.slack.end(), [](double s) { return s >= -1e-12; });
    return r;
}

bool t3_bound_check(const RateParams& r) {
    const bool cosh_bound = std::abs(r.inv_T3) <= std::abs(r.inv_T2) * (1.0 + 1e-12);
    const double c11c22 = 0.25 * r.inv_T1 * r.inv_T1 * (1.0 - r.w_eq * r.w_eq);
    const bool c_bound = r.inv_T3 * r.inv_T3 <= c11c22 * (1.0 + 1e-12) + 1e-15;
    return cosh_bound && c_bound;
}

std::optional<SvcKrausConstants> svc_kraus_constants(const AffineMap& m) {
    const auto [l1, l2, l3] = m.Lambda;
    const double s3 = m.shift[2];
    if (std::abs(m.shift[0]) > kSingular || std::abs(m.shift[1]) > kSingular) {
        throw DomainError("svc_kraus: only shifts along w are supported");
    }
    if (std::abs(l1 - 1.0) <= 1e-15 && std::abs(l2 - 1.0) <= 1e-15 && std::abs(l3 - 1.0) <= 1e-15 &&
        std::abs(s3) <= 1e-15) {
        return std::nullopt;
    }

    const double x = 1.0 - l1 - l2 + l3;
    const double y = 1.0 - l1 + l2 - l3;
    const double sx = checked_sqrt(x, "1 - L1 - L2 + L3");
    const double sy = checked_sqrt(y, "1 - L1 + L2 - L3");

    SvcKrausConstants k;
    k.m10 = sx > kSingular ? 0.5 * s3 / sx : 0.0;
    k.m21 = sy > kSingular ? 0.5 * s3 / sy : 0.0;
    k.m22 = cplx(0.0, -0.5 * sy);
    k.m13 = 0.5 * sx;
    k.m40 = 0.5 * checked_sqrt(1.0 + l1 + l2 + l3 - shift_ratio(s3, x, "1 - L1 - L2 + L3"), "m40");
    k.m31 = 0.5 * checked_sqrt(1.0 + l1 - l2 - l3 - shift_ratio(s3, y, "1 - L1 + L2 - L3"), "m31");
    return k;
}

KrausSet svc_kraus(const AffineMap& m) {
    const auto k = svc_kraus_constants(m);
    if (!k) return KrausSet({CMat::identity(2)});
    const CMat id = ops::identity2();
    const CMat sx = ops::sigma_x();
    return KrausSet({
        id * cplx(k->m10) + ops::sigma_z() * cplx(k->m13),
        sx * cplx(k->m21) + ops::sigma_y() * k->m22,
        sx * cplx(k->m31),
        id * cplx(k->m40),
    });
}

CMat apply_kraus(const KrausSet& k, const CMat& x) {
    CMat out(2);
    for (const auto& a : k.ops) out += a.adjoint() * x * a;
    return out;
}

QubitState apply_kraus(const KrausSet& k, const QubitState& rho) {
    return QubitState::trusted(apply_kraus(k, rho.matrix()));
}

KrausSet phase_damping_kraus(double Lambda) {
    if (!(Lambda >= 0.0 && Lambda <= 1.0)) throw DomainError("phase damping contraction must lie in [0, 1]");
    return KrausSet({ops::identity2() * cplx(std::sqrt(0.5 * (1.0 + Lambda))),
                     ops::sigma_z() * cplx(std::sqrt(0.5 * (1.0 - Lambda)))});
}

std::array<cplx, 4> pauli_coefficients(const CMat& a) {
    const auto basis = ops::pauli_basis();
    std::array<cplx, 4> m{};
    for (std::size_t j = 0; j < 4; ++j) m[j] = 0.5 * (basis[j] * a).trace();
    return m;
}

AppendixReport verify_appendix_equations(const KrausSet& k, const AffineMap& map) {
    if (k.ops.size() > 4) throw std::invalid_argument("verify_appendix_equations: at most four operators");

    // mk[k][j]: coefficient of sigma_j in operator k; column j is the vector m_j.
    std::array<std::array<cplx, 4>, 4> mk{};
    for (std::size_t i = 0; i < k.ops.size(); ++i) mk[i] = pauli_coefficients(k.ops[i]);

    // d(i,j) = m_i^* . m_j and e(i,j) = m_i . m_j^*.
    auto d = [&](int i, int j) {
        cplx s = 0.0;
        for (std::size_t r = 0; r < 4; ++r) s += std::conj(mk[r][i]) * mk[r][j];
        return s;
    };
    auto e = [&](int i, int j) { return std::conj(d(i, j)); };
    const cplx I(0.0, 1.0);
    const auto [l1, l2, l3] = map.Lambda;
    const auto [t1, t2, t3] = map.shift;

    const cplx diag_l1 = d(0, 0) + d(1, 1) - d(2, 2) - d(3, 3);
    const cplx diag_l2 = d(0, 0) - d(1, 1) + d(2, 2) - d(3, 3);
    const cplx x12 = I * (d(1, 2) + e(1, 2));
    const cplx x03 = d(0, 3) - e(0, 3);

    const std::array<std::pair<cplx, double>, 14> eqs{{
        {d(0, 0) + d(1, 1) + d(2, 2) + d(3, 3), 1.0},
        {d(0, 1) + e(0, 1) + I * (d(2, 3) - e(2, 3)), t1},
        {d(0, 2) + e(0, 2) - I * (d(1, 3) - e(1, 3)), t2},
        {d(0, 3) + e(0, 3) + I * (d(1, 2) - e(1, 2)), t3},
        {I * (d(0, 2) - e(0, 2)) - (d(1, 3) + e(1, 3)), 0.0},
        {diag_l1 + x12 - x03, l1},
        {diag_l1 - x12 + x03, l1},
        {d(0, 1) - e(0, 1) - I * (d(2, 3) + e(2, 3)), 0.0},
        {diag_l2 - x12 - x03, l2},
        {diag_l2 + x12 + x03, l2},
        {d(0, 0) - d(1, 1) - d(2, 2) + d(3, 3), l3},
        {d(0, 1) - e(0, 1) + d(1, 3) + e(1, 3) + I * (d(0, 2) - e(0, 2) + d(2, 3) + e(2, 3)), 0.0},
        {d(0, 1) - e(0, 1) - d(1, 3) - e(1, 3) + I * (-d(0, 2) + e(0, 2) + d(2, 3) + e(2, 3)), 0.0},
        {d(0, 3) + e(0, 3) - I * (d(1, 2) - e(1, 2)), 0.0},
    }};

    AppendixReport rep;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        rep.residuals[i] = std::abs(eqs[i].first - eqs[i].second);
        rep.max_residual = std::max(rep.max_residual, rep.residuals[i]);
    }
    return rep;
}

}  // namespace qmc
