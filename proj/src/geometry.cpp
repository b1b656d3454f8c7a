#include "qmc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmc/error.hpp"

namespace qmc {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 to_vec(const BlochVector& b) { return {b.u, b.v, b.w}; }
BlochVector to_bloch(const Vec3& v) { return {v[0], v[1], v[2]}; }

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 normalized(const Vec3& a) {
    const double n = std::sqrt(dot(a, a));
    return {a[0] / n, a[1] / n, a[2] / n};
}

// Orthonormal tangent pair at unit vector p.
std::pair<Vec3, Vec3> tangent_frame(const Vec3& p) {
    const Vec3 helper = std::abs(p[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const double k = dot(helper, p);
    const Vec3 e1 = normalized({helper[0] - k * p[0], helper[1] - k * p[1], helper[2] - k * p[2]});
    const Vec3 e2 = {p[1] * e1[2] - p[2] * e1[1], p[2] * e1[0] - p[0] * e1[2], p[0] * e1[1] - p[1] * e1[0]};
    return {e1, e2};
}

double angle_between(const Vec3& a, const Vec3& b) { return std::acos(std::clamp(dot(a, b), -1.0, 1.0)); }

struct Candidate {
    Vec3 input;
    double value;  // squared output length
};

}  // namespace

BlochVector rho_to_bloch(const CMat& rho) {
    const cplx d = rho(0, 1);
    return {2.0 * d.real(), -2.0 * d.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

BlochVector rho_to_bloch(const QubitState& rho) { return rho_to_bloch(rho.matrix()); }

QubitState bloch_to_rho(const BlochVector& b) {
    if (!(b.norm() <= 1.0 + 1e-12)) throw DomainError("Bloch vector lies outside the unit ball");
    CMat rho(2);
    rho(0, 0) = 0.5 * (1.0 + b.w);
    rho(1, 1) = 0.5 * (1.0 - b.w);
    rho(0, 1) = cplx(0.5 * b.u, -0.5 * b.v);
    rho(1, 0) = cplx(0.5 * b.u, 0.5 * b.v);
    return QubitState::trusted(rho);
}

double Ellipsoid::surface_residual(const BlochVector& p) const {
    const Vec3 x = to_vec(p);
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double q = (x[i] - center[i]) / semi_axes[i];
        s += q * q;
    }
    return s - 1.0;
}

Ellipsoid image_ellipsoid(const AffineMap& m) {
    Ellipsoid e;
    std::string flat;
    for (std::size_t i = 0; i < 3; ++i) {
        e.semi_axes[i] = std::abs(m.Lambda[i]);
        if (e.semi_axes[i] == 0.0) flat += (flat.empty() ? "" : ", ") + std::string(1, "uvw"[i]);
    }
    if (!flat.empty()) throw DomainError("degenerate ellipsoid: flattened axes " + flat);
    e.center = m.shift;
    return e;
}

BlochVector apply_affine(const AffineMap& m, const BlochVector& b) {
    return {m.Lambda[0] * b.u + m.shift[0], m.Lambda[1] * b.v + m.shift[1], m.Lambda[2] * b.w + m.shift[2]};
}

BlochVector BlochAffine::operator()(const BlochVector& b) const {
    const Vec3 x = to_vec(b);
    Vec3 y = c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) y[i] += T[i][j] * x[j];
    return to_bloch(y);
}

BlochAffine bloch_affine(const RateParams& r, double t) {
    BlochAffine a;
    const Vec3 c = to_vec(rho_to_bloch(channel_apply(r, t, QubitState())));
    a.c = c;
    for (std::size_t j = 0; j < 3; ++j) {
        Vec3 e{0.0, 0.0, 0.0};
        e[j] = 1.0;
        const Vec3 img = to_vec(rho_to_bloch(channel_apply(r, t, bloch_to_rho(to_bloch(e)))));
        for (std::size_t i = 0; i < 3; ++i) a.T[i][j] = img[i] - c[i];
    }
    return a;
}

std::vector<BlochVector> fibonacci_sphere(std::size_t n) {
    std::vector<BlochVector> pts;
    pts.reserve(n);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        pts.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return pts;
}

double entropy_from_bloch_length(double length) {
    const double p = std::clamp(0.5 * (1.0 + length), 0.0, 1.0);
    const double q = 1.0 - p;
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (q > 0.0) h -= q * std::log2(q);
    return h;
}

MinimalEntropyResult minimal_entropy_states(const RateParams& r, double t, std::size_t grid_points) {
    const BlochAffine map = bloch_affine(r, t);
    auto objective = [&](const Vec3& p) {
        const BlochVector out = map(to_bloch(p));
        return out.u * out.u + out.v * out.v + out.w * out.w;
    };

    const auto grid = fibonacci_sphere(grid_points);
    std::vector<Candidate> scored;
    scored.reserve(grid.size());
    for (const auto& g : grid) scored.push_back({to_vec(g), objective(to_vec(g))});

    double best = 0.0;
    for (const auto& c : scored) best = std::max(best, c.value);

    // Seeds: grid points close to the grid optimum, best first, ties by grid order.
    std::vector<Candidate> seeds;
    for (const auto& c : scored)
        if (c.value >= best * (1.0 - 1e-2)) seeds.push_back(c);
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (seeds.size() > 2000) seeds.resize(2000);

    const double spacing = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(grid_points));
    for (auto& s : seeds) {
        double step = spacing;
        int iterations = 0;
        while (step >= 1e-8 && iterations++ < 100000) {
            bool moved = false;
            const auto [e1, e2] = tangent_frame(s.input);
            for (const Vec3& dir : {e1, e2}) {
                for (double sign : {1.0, -1.0}) {
                    const Vec3 trial = normalized({s.input[0] + sign * step * dir[0], s.input[1] + sign * step * dir[1],
                                                   s.input[2] + sign * step * dir[2]});
                    const double v = objective(trial);
                    if (v > s.value) {
                        s = {trial, v};
                        moved = true;
                        break;
                    }
                }
                if (moved) break;
            }
            if (!moved) step *= 0.5;
        }
    }

    double refined_best = 0.0;
    for (const auto& s : seeds) refined_best = std::max(refined_best, s.value);
    const double best_length = std::sqrt(refined_best);

    std::vector<Candidate> optima;
    for (const auto& s : seeds) {
        if (std::sqrt(s.value) < best_length - 1e-6) continue;
        const bool duplicate = std::any_of(optima.begin(), optima.end(), [&](const Candidate& o) {
            return angle_between(o.input, s.input) < 1e-4;
        });
        if (!duplicate) optima.push_back(s);
    }
    std::sort(optima.begin(), optima.end(), [](const Candidate& a, const Candidate& b) {
        if (a.input[1] != b.input[1]) return a.input[1] > b.input[1];
        if (a.input[0] != b.input[0]) return a.input[0] > b.input[0];
        return a.input[2] > b.input[2];
    });

    MinimalEntropyResult result;
    result.max_length = best_length;
    result.degenerate = optima.size() > 2;
    std::vector<Candidate> chosen;
    if (result.degenerate && optima.size() > 64) {
        for (std::size_t i = 0; i < 64; ++i) chosen.push_back(optima[i * optima.size() / 64]);
    } else {
        chosen = optima;
    }
    for (const auto& c : chosen) {
        const BlochVector out = map(to_bloch(c.input));
        result.states.push_back({to_bloch(c.input), out, entropy_from_bloch_length(out.norm())});
    }
    return result;
}

std::vector<std::array<double, 4>> ellipsoid_surface_rows(const RateParams& r, const std::vector<double>& times,
                                                          std::size_t points) {
    const auto sphere = fibonacci_sphere(points);
    std::vector<std::array<double, 4>> rows;
    rows.reserve(times.size() * sphere.size());
    for (double t : times) {
        const BlochAffine map = bloch_affine(r, t);
        for (const auto& p : sphere) {
            const BlochVector img = map(p);
            rows.push_back({t, img.u, img.v, img.w});
        }
    }
    return rows;
}

}  // namespace qmc
