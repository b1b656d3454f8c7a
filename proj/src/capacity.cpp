#include "qmc/capacity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmc/damping_basis.hpp"
#include "qmc/error.hpp"
#include "qmc/geometry.hpp"

namespace qmc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double radical_inverse(std::size_t i, std::size_t base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

constexpr std::array<std::size_t, 12> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Search coordinates: per member (theta, phi, weight). Weights are mapped to
// probabilities by normalisation, so any non-negative vector is admissible.
struct Point {
    std::vector<double> x;
    double chi = -1.0;
};

BlochVector direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::vector<EnsembleMember> decode(const std::vector<double>& x) {
    const std::size_t n = x.size() / 3;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += x[3 * i + 2];
    std::vector<EnsembleMember> members;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = total > 0.0 ? x[3 * i + 2] / total : 1.0 / static_cast<double>(n);
        members.push_back({p, direction(x[3 * i], x[3 * i + 1])});
    }
    return members;
}

double output_entropy(const BlochAffine& map, const BlochVector& b) {
    return entropy_from_bloch_length(map(b).norm());
}

double chi_fast(const BlochAffine& map, const std::vector<EnsembleMember>& members) {
    BlochVector avg;
    double mixing = 0.0;
    for (const auto& m : members) {
        avg.u += m.p * m.b.u;
        avg.v += m.p * m.b.v;
        avg.w += m.p * m.b.w;
        if (m.p > 0.0) mixing += m.p * output_entropy(map, m.b);
    }
    return output_entropy(map, avg) - mixing;
}

// A sweep that gains less than 1e-6 bits halves the step; the search ends
// once the step drops below 1e-9.
void pattern_search(const BlochAffine& map, Point& pt) {
    const std::size_t dims = pt.x.size();
    double step = 0.25;
    while (step > 1e-9) {
        const double before = pt.chi;
        for (std::size_t k = 0; k < dims; ++k) {
            for (double sign : {1.0, -1.0}) {
                std::vector<double> trial = pt.x;
                trial[k] += sign * step;
                if (k % 3 == 2) trial[k] = std::clamp(trial[k], 0.0, 1.0);
                const double chi = chi_fast(map, decode(trial));
                if (chi > pt.chi) {
                    pt.x = std::move(trial);
                    pt.chi = chi;
                    break;
                }
            }
        }
        if (pt.chi - before < 1e-6) step *= 0.5;
    }
}

BlochVector rotate(const BlochVector& b, int axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    switch (axis) {
        case 0: return {b.u, c * b.v - s * b.w, s * b.v + c * b.w};
        case 1: return {c * b.u + s * b.w, b.v, -s * b.u + c * b.w};
        default: return {c * b.u - s * b.v, s * b.u + c * b.v, b.w};
    }
}

double distance(const BlochVector& a, const BlochVector& b) {
    return std::sqrt((a.u - b.u) * (a.u - b.u) + (a.v - b.v) * (a.v - b.v) + (a.w - b.w) * (a.w - b.w));
}

// Channel commutes with a rotation about `axis` when images of rotated
// probes equal rotated images.
bool rotation_symmetric(const BlochAffine& map, int axis) {
    constexpr double angle = 0.7;
    const BlochVector probes[] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& p : probes) {
        if (distance(map(rotate(p, axis, angle)), rotate(map(p), axis, angle)) > 1e-10) return false;
    }
    return true;
}

}  // namespace

double von_neumann_entropy(const QubitState& rho) {
    double s = 0.0;
    for (double lambda : herm_eigvals(rho.matrix())) {
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return s;
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty() || members_.size() > 4) throw DomainError("an ensemble holds one to four states");
    double total = 0.0;
    for (const auto& m : members_) {
        if (!(m.p >= 0.0)) throw DomainError("ensemble weights must be non-negative");
        if (std::abs(m.b.norm() - 1.0) > 1e-12) throw DomainError("ensemble members must be pure states");
        total += m.p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("ensemble weights must sum to one");
}

QubitState Ensemble::average() const {
    BlochVector avg;
    for (const auto& m : members_) {
        avg.u += m.p * m.b.u;
        avg.v += m.p * m.b.v;
        avg.w += m.p * m.b.w;
    }
    return bloch_to_rho(avg);
}

Ensemble v_axis_pair() { return Ensemble({{0.5, {0.0, 1.0, 0.0}}, {0.5, {0.0, -1.0, 0.0}}}); }

double holevo_quantity(const RateParams& r, double t, const Ensemble& e) {
    double mixing = 0.0;
    for (const auto& m : e.members()) {
        if (m.p > 0.0) mixing += m.p * von_neumann_entropy(channel_apply(r, t, bloch_to_rho(m.b)));
    }
    return von_neumann_entropy(channel_apply(r, t, e.average())) - mixing;
}

CapacityResult holevo_capacity(const RateParams& r, double t, std::size_t max_states) {
    if (max_states < 2 || max_states > 4) throw std::invalid_argument("holevo_capacity: max_states must be 2, 3 or 4");
    const BlochAffine map = bloch_affine(r, t);
    const std::size_t dims = 3 * max_states;

    constexpr std::size_t kStarts = 256;
    constexpr std::size_t kRefined = 8;
    std::vector<Point> starts;
    starts.reserve(kStarts + 1);

    // The uniform +-v pair (remaining weights zero) seeds the search.
    {
        Point p;
        p.x.assign(dims, 0.0);
        p.x[0] = p.x[3] = 0.5 * std::numbers::pi;
        p.x[1] = 0.5 * std::numbers::pi;
        p.x[4] = 1.5 * std::numbers::pi;
        p.x[2] = p.x[5] = 1.0;
        p.chi = chi_fast(map, decode(p.x));
        starts.push_back(std::move(p));
    }
    for (std::size_t i = 1; i <= kStarts; ++i) {
        Point p;
        p.x.resize(dims);
        for (std::size_t k = 0; k < dims; ++k) {
            const double h = radical_inverse(i, kPrimes[k]);
            switch (k % 3) {
                case 0: p.x[k] = std::acos(1.0 - 2.0 * h); break;
                case 1: p.x[k] = kTwoPi * h; break;
                default: p.x[k] = h; break;
            }
        }
        p.chi = chi_fast(map, decode(p.x));
        starts.push_back(std::move(p));
    }
    // Stable order: best first, ties keep the schedule order.
    std::stable_sort(starts.begin() + 1, starts.end(), [](const Point& a, const Point& b) { return a.chi > b.chi; });

    Point best;
    for (std::size_t i = 0; i < std::min(starts.size(), kRefined + 1); ++i) {
        Point p = starts[i];
        pattern_search(map, p);
        if (p.chi > best.chi) best = std::move(p);
    }

    // Drop zero-weight members and renormalise exactly.
    auto members = decode(best.x);
    std::erase_if(members, [](const EnsembleMember& m) { return m.p <= 0.0; });
    double total = 0.0;
    for (const auto& m : members) total += m.p;
    for (auto& m : members) m.p /= total;

    CapacityResult result;
    result.ensemble = Ensemble(std::move(members));
    result.C = holevo_quantity(r, t, result.ensemble);
    for (int axis = 0; axis < 3 && !result.degenerate; ++axis) {
        if (!rotation_symmetric(map, axis)) continue;
        for (const auto& m : result.ensemble.members()) {
            if (distance(rotate(m.b, axis, 0.7), m.b) > 1e-6) result.degenerate = true;
        }
    }
    return result;
}

CapacityDecomposition capacity_decomposition(const RateParams& r, double t) {
    const Ensemble pair = v_axis_pair();
    CapacityDecomposition d;
    d.shift_error = 1.0 - von_neumann_entropy(channel_apply(r, t, pair.average()));
    for (const auto& m : pair.members()) d.mixing_error += m.p * von_neumann_entropy(channel_apply(r, t, bloch_to_rho(m.b)));
    return d;
}

}  // namespace qmc
