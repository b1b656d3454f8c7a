#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qmc {

using cplx = std::complex<double>;

/// Dense complex square matrix of dimension 2 (one qubit) or 4 (two qubits).
///
/// Storage is inline and row-major, so a CMat is a plain value type: cheap
/// to copy and safe to share between threads.
class CMat {
public:
    static constexpr std::size_t kMaxDim = 4;

    /// Zero matrix. Throws std::invalid_argument unless dim is 2 or 4.
    explicit CMat(std::size_t dim = 2);

    /// Row-major initializer; the number of entries must be 4 or 16.
    CMat(std::initializer_list<cplx> entries);

    static CMat identity(std::size_t dim);
    static CMat diag(std::span<const cplx> d);
    static CMat diag(std::initializer_list<cplx> d);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    CMat adjoint() const;
    CMat transpose() const;
    CMat conj() const;
    cplx trace() const;

    /// Largest elementwise modulus.
    double max_abs() const;
    bool is_hermitian(double tol = 1e-10) const;

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cplx s);

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(CMat a, cplx s) { return a *= s; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }
    friend CMat operator*(const CMat& a, const CMat& b);

    friend bool operator==(const CMat& a, const CMat& b);

private:
    std::size_t dim_;
    std::array<cplx, kMaxDim * kMaxDim> data_{};
};

/// Matrix product. Throws std::invalid_argument on dimension mismatch.
CMat mat_mul(const CMat& a, const CMat& b);

/// Kronecker product of two 2x2 matrices; a is the left (block-index) factor.
CMat kron(const CMat& a, const CMat& b);

/// Eigenvalues of a Hermitian matrix in ascending order. Throws
/// std::invalid_argument when h is not Hermitian to 1e-10.
std::vector<double> herm_eigvals(const CMat& h);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
CMat mat_exp(const CMat& g);

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const CMat& a, const CMat& b);

/// Single-qubit operators in the {|e>, |g>} basis.
namespace ops {
CMat identity2();
/// Lowering operator |g><e|.
CMat sigma_minus();
/// Raising operator |e><g|.
CMat sigma_plus();
CMat sigma_x();
CMat sigma_y();
CMat sigma_z();
/// {I, sx, sy, sz}
std::array<CMat, 4> pauli_basis();
}  // namespace ops

namespace detail {
/// Ascending eigenvalues of an n x n Hermitian matrix given row-major.
/// Works for any small n; CMat only exposes 2 and 4.
std::vector<double> hermitian_eigenvalues(std::span<const cplx> a, std::size_t n);
}  // namespace detail

}  // namespace qmc
