#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mpschain/errors.hpp"

namespace mpschain {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major to match the wire format
/// {"rows": r, "cols": c, "entries": [[re, im], ...]}.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Tensor-factor layout of a dense operator: side length d^n_sites.
struct SiteDims {
  int d = 0;
  int n_sites = 0;
};

inline constexpr double kDefaultAtol = 1e-12;
inline constexpr double kDefaultRtol = 1e-10;
inline constexpr double kDefaultHermitianTol = 1e-10;

/// Combined-tolerance comparison: |a - b| <= atol + rtol * |b|.
bool approx_equal(Complex a, Complex b, double atol = kDefaultAtol,
                  double rtol = kDefaultRtol);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& m);

/// Sum of diagonal entries; divided by the side length when normalized.
/// Throws DimensionError for non-square input.
Complex trace(const ComplexMatrix& m, bool normalized = false);

/// Kronecker product, (rA*rB) x (cA*cB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Left-to-right product of a non-empty sequence of equal-sized square
/// matrices. Fixed association order (((m1*m2)*m3)...), so results are
/// reproducible bit-for-bit.
ComplexMatrix chain_product(std::span<const ComplexMatrix> ms);

/// Eigenvalues of a Hermitian matrix, descending. The input must satisfy
/// max|M - M^dagger| <= tol, else ValidationError; it is symmetrized
/// before the solve.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tol = kDefaultHermitianTol);

/// Traces out the last k tensor factors of an operator on d^n_sites.
/// With normalized=false the unnormalized trace is preserved; with
/// normalized=true product inputs A (x) B map to A * (Tr B / d^k).
ComplexMatrix partial_trace_last(const ComplexMatrix& m, SiteDims dims, int k,
                                 bool normalized);

namespace detail {
/// d^n, or SIZE_MAX when the power exceeds `limit` (overflow-safe).
std::size_t pow_or_limit(int d, int n, std::size_t limit);
}  // namespace detail

}  // namespace mpschain
