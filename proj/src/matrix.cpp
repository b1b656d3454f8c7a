#include "qmc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qmc {

namespace {

void check_dim(std::size_t dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("CMat dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void check_same(const CMat& a, const CMat& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

double inf_norm(const CMat& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < a.dim(); ++j) row += std::abs(a(i, j));
        best = std::max(best, row);
    }
    return best;
}

// Cyclic Jacobi on a real symmetric matrix stored row-major.
std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                total += at(i, j) * at(i, j);
                if (i != j) off += at(i, j) * at(i, j);
            }
        }
        if (off <= 1e-30 * std::max(total, 1e-300) || off < 1e-300) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace

CMat::CMat(std::size_t dim) : dim_(dim) { check_dim(dim); }

CMat::CMat(std::initializer_list<cplx> entries) {
    if (entries.size() == 4) {
        dim_ = 2;
    } else if (entries.size() == 16) {
        dim_ = 4;
    } else {
        throw std::invalid_argument("CMat initializer needs 4 or 16 entries");
    }
    std::copy(entries.begin(), entries.end(), data_.begin());
}

CMat CMat::identity(std::size_t dim) {
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diag(std::span<const cplx> d) {
    CMat m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMat CMat::diag(std::initializer_list<cplx> d) {
    return diag(std::span<const cplx>(d.begin(), d.size()));
}

CMat CMat::adjoint() const {
    CMat r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

CMat CMat::transpose() const {
    CMat r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
    return r;
}

CMat CMat::conj() const {
    CMat r(dim_);
    for (std::size_t k = 0; k < dim_ * dim_; ++k) r.data_[k] = std::conj(data_[k]);
    return r;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (std::size_t k = 0; k < dim_ * dim_; ++k) m = std::max(m, std::abs(data_[k]));
    return m;
}

bool CMat::is_hermitian(double tol) const { return max_abs_diff(*this, adjoint()) <= tol; }

CMat& CMat::operator+=(const CMat& o) {
    check_same(*this, o, "operator+");
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] += o.data_[k];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    check_same(*this, o, "operator-");
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] -= o.data_[k];
    return *this;
}

CMat& CMat::operator*=(cplx s) {
    for (std::size_t k = 0; k < dim_ * dim_; ++k) data_[k] *= s;
    return *this;
}

CMat operator*(const CMat& a, const CMat& b) { return mat_mul(a, b); }

bool operator==(const CMat& a, const CMat& b) {
    if (a.dim_ != b.dim_) return false;
    return std::equal(a.data_.begin(), a.data_.begin() + a.dim_ * a.dim_, b.data_.begin());
}

CMat mat_mul(const CMat& a, const CMat& b) {
    check_same(a, b, "mat_mul");
    const std::size_t n = a.dim();
    CMat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

CMat kron(const CMat& a, const CMat& b) {
    if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("kron: both factors must be 2x2");
    CMat r(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

namespace detail {

std::vector<double> hermitian_eigenvalues(std::span<const cplx> a, std::size_t n) {
    if (a.size() != n * n) throw std::invalid_argument("hermitian_eigenvalues: size mismatch");
    // [[Re, -Im], [Im, Re]] is real symmetric with every eigenvalue of a doubled.
    const std::size_t m = 2 * n;
    std::vector<double> big(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx z = a[i * n + j];
            big[i * m + j] = z.real();
            big[(i + n) * m + (j + n)] = z.real();
            big[i * m + (j + n)] = -z.imag();
            big[(i + n) * m + j] = z.imag();
        }
    const auto doubled = jacobi_symmetric(std::move(big), m);
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return ev;
}

}  // namespace detail

std::vector<double> herm_eigvals(const CMat& h) {
    if (!h.is_hermitian(1e-10)) throw std::invalid_argument("herm_eigvals: matrix is not Hermitian");
    if (h.dim() == 2) {
        const double a = h(0, 0).real();
        const double d = h(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double rad = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
        return {mean - rad, mean + rad};
    }
    std::array<cplx, 16> flat{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) flat[i * 4 + j] = h(i, j);
    return detail::hermitian_eigenvalues(flat, 4);
}

CMat mat_exp(const CMat& g) {
    const std::size_t n = g.dim();
    const double norm = inf_norm(g);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const CMat a = g * cplx(std::ldexp(1.0, -squarings));

    CMat sum = CMat::identity(n);
    CMat term = CMat::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = mat_mul(term, a) * cplx(1.0 / k);
        sum += term;
        if (term.max_abs() <= 1e-18 * sum.max_abs()) break;
    }
    for (int s = 0; s < squarings; ++s) sum = mat_mul(sum, sum);
    return sum;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    check_same(a, b, "max_abs_diff");
    return (a - b).max_abs();
}

namespace ops {

CMat identity2() { return CMat::identity(2); }
CMat sigma_minus() { return CMat{0.0, 0.0, 1.0, 0.0}; }
CMat sigma_plus() { return CMat{0.0, 1.0, 0.0, 0.0}; }
CMat sigma_x() { return CMat{0.0, 1.0, 1.0, 0.0}; }
CMat sigma_y() { return CMat{0.0, cplx(0, -1), cplx(0, 1), 0.0}; }
CMat sigma_z() { return CMat{1.0, 0.0, 0.0, -1.0}; }

std::array<CMat, 4> pauli_basis() { return {identity2(), sigma_x(), sigma_y(), sigma_z()}; }

}  // namespace ops

}  // namespace qmc
