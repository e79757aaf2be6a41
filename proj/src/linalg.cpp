#include "mpschain/linalg.hpp"

#include <algorithm>
#include <string>

namespace mpschain {

bool approx_equal(Complex a, Complex b, double atol, double rtol) {
  return std::abs(a - b) <= atol + rtol * std::abs(b);
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

Complex trace(const ComplexMatrix& m, bool normalized) {
  if (m.rows() != m.cols()) {
    throw DimensionError("trace requires a square matrix, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  Complex t = m.trace();
  return normalized ? t / static_cast<double>(m.rows()) : t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix chain_product(std::span<const ComplexMatrix> ms) {
  if (ms.empty()) {
    throw ArgumentError("chain_product requires a non-empty sequence");
  }
  const Eigen::Index side = ms[0].rows();
  for (const ComplexMatrix& m : ms) {
    if (m.rows() != m.cols() || m.rows() != side) {
      throw DimensionError(
          "chain_product requires square matrices of one common side");
    }
  }
  ComplexMatrix acc = ms[0];
  for (std::size_t k = 1; k < ms.size(); ++k) {
    acc = acc * ms[k];
  }
  return acc;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eigenvalues requires a square matrix");
  }
  const double defect = (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
  if (defect > tol) {
    throw ValidationError("matrix is not Hermitian within tolerance " +
                          std::to_string(tol) + " (max defect " +
                          std::to_string(defect) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eigenvalue iteration failed to converge");
  }
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

ComplexMatrix partial_trace_last(const ComplexMatrix& m, SiteDims dims, int k,
                                 bool normalized) {
  if (dims.d < 1 || dims.n_sites < 1) {
    throw ArgumentError("partial_trace_last requires positive dims");
  }
  if (k < 1 || k >= dims.n_sites) {
    throw ArgumentError("partial_trace_last requires 0 < k < n_sites, got k=" +
                        std::to_string(k) + ", n_sites=" +
                        std::to_string(dims.n_sites));
  }
  const std::size_t side =
      detail::pow_or_limit(dims.d, dims.n_sites, std::size_t{1} << 62);
  if (m.rows() != m.cols() ||
      static_cast<std::size_t>(m.rows()) != side) {
    throw DimensionError("operator side must equal d^n_sites = " +
                         std::to_string(side));
  }
  const Eigen::Index kept = static_cast<Eigen::Index>(
      detail::pow_or_limit(dims.d, dims.n_sites - k, std::size_t{1} << 62));
  const Eigen::Index traced = m.rows() / kept;

  ComplexMatrix out = ComplexMatrix::Zero(kept, kept);
  for (Eigen::Index a = 0; a < kept; ++a) {
    for (Eigen::Index b = 0; b < kept; ++b) {
      Complex sum = 0.0;
      for (Eigen::Index t = 0; t < traced; ++t) {
        sum += m(a * traced + t, b * traced + t);
      }
      out(a, b) = sum;
    }
  }
  if (normalized) {
    out /= static_cast<double>(traced);
  }
  return out;
}

namespace detail {

std::size_t pow_or_limit(int d, int n, std::size_t limit) {
  std::size_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (result > limit / static_cast<std::size_t>(d)) {
      return SIZE_MAX;
    }
    result *= static_cast<std::size_t>(d);
  }
  return result > limit ? SIZE_MAX : result;
}

}  // namespace detail

}  // namespace mpschain
