#include "mpschain/state_engine.hpp"

#include <chrono>
#include <cmath>

namespace mpschain {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// In-place application of a single-site operator to the statevector,
// at 1-based site k of n_total, site-1 digit most significant.
void apply_single_site(ComplexVector& psi, int d, int n_total, int k,
                       const ComplexMatrix& op) {
  const std::size_t stride =
      detail::pow_or_limit(d, n_total - k, SIZE_MAX);
  const std::size_t outer_count =
      detail::pow_or_limit(d, k - 1, SIZE_MAX);
  const std::size_t block = stride * static_cast<std::size_t>(d);

  std::vector<Complex> scratch(static_cast<std::size_t>(d));
  for (std::size_t o = 0; o < outer_count; ++o) {
    const std::size_t base = o * block;
    for (std::size_t t = 0; t < stride; ++t) {
      for (int i = 0; i < d; ++i) {
        Complex sum = 0.0;
        for (int j = 0; j < d; ++j) {
          sum += op(i, j) *
                 psi[static_cast<Eigen::Index>(base + j * stride + t)];
        }
        scratch[static_cast<std::size_t>(i)] = sum;
      }
      for (int i = 0; i < d; ++i) {
        psi[static_cast<Eigen::Index>(base + i * stride + t)] =
            scratch[static_cast<std::size_t>(i)];
      }
    }
  }
}

// E(X) = sum_{i,j} <i|X|j> conj(A_i) (x) A_j on m^2 dimensions.
ComplexMatrix transfer_factor(const MPSFamily& family, int site,
                              const ComplexMatrix& x) {
  const int m = family.m();
  ComplexMatrix e = ComplexMatrix::Zero(m * m, m * m);
  for (int i = 0; i < family.d(); ++i) {
    const ComplexMatrix conj_a_i = family.tensor(site, i).conjugate();
    for (int j = 0; j < family.d(); ++j) {
      if (x(i, j) == Complex{0.0, 0.0}) {
        continue;
      }
      e += x(i, j) * kron(conj_a_i, family.tensor(site, j));
    }
  }
  return e;
}

void check_same_d(const MPSFamily& family, const LocalObservable& x) {
  if (x.d() != family.d()) {
    throw DimensionError("observable local dimension " +
                         std::to_string(x.d()) +
                         " does not match the family's d = " +
                         std::to_string(family.d()));
  }
}

}  // namespace

LocalObservable LocalObservable::product(std::vector<ComplexMatrix> factors) {
  if (factors.empty()) {
    throw ArgumentError("product observable requires at least one factor");
  }
  const Eigen::Index d = factors[0].rows();
  for (const ComplexMatrix& f : factors) {
    if (f.rows() != f.cols() || f.rows() != d) {
      throw DimensionError(
          "product observable factors must all be d x d with one common d");
    }
  }
  LocalObservable x;
  x.form_ = Form::Product;
  x.d_ = static_cast<int>(d);
  x.n_sites_ = static_cast<int>(factors.size());
  x.factors_ = std::move(factors);
  return x;
}

LocalObservable LocalObservable::dense(int d, int n_sites,
                                       ComplexMatrix matrix) {
  if (d < 1 || n_sites < 1) {
    throw ArgumentError("dense observable requires positive d and n_sites");
  }
  const std::size_t side = detail::pow_or_limit(d, n_sites, std::size_t{1} << 62);
  if (matrix.rows() != matrix.cols() ||
      static_cast<std::size_t>(matrix.rows()) != side) {
    throw DimensionError("dense observable side must equal d^n_sites = " +
                         std::to_string(side));
  }
  LocalObservable x;
  x.form_ = Form::Dense;
  x.d_ = d;
  x.n_sites_ = n_sites;
  x.matrix_ = std::move(matrix);
  return x;
}

const std::vector<ComplexMatrix>& LocalObservable::factors() const {
  if (form_ != Form::Product) {
    throw UnsupportedFormError("observable is not in product form");
  }
  return factors_;
}

const ComplexMatrix& LocalObservable::matrix() const {
  if (form_ != Form::Dense) {
    throw UnsupportedFormError("observable is not in dense form");
  }
  return matrix_;
}

LocalObservable LocalObservable::padded(int extra) const {
  if (extra < 0) {
    throw ArgumentError("padding must be non-negative");
  }
  if (extra == 0) {
    return *this;
  }
  if (form_ == Form::Product) {
    std::vector<ComplexMatrix> factors = factors_;
    for (int i = 0; i < extra; ++i) {
      factors.push_back(ComplexMatrix::Identity(d_, d_));
    }
    return product(std::move(factors));
  }
  const std::size_t pad_side = detail::pow_or_limit(d_, extra, std::size_t{1} << 30);
  if (pad_side == SIZE_MAX) {
    throw ResourceError("identity padding is too large to materialize");
  }
  return dense(d_, n_sites_ + extra,
               kron(matrix_, ComplexMatrix::Identity(
                                 static_cast<Eigen::Index>(pad_side),
                                 static_cast<Eigen::Index>(pad_side))));
}

EvaluationReport evaluate_naive(const MPSFamily& family,
                                const LocalObservable& x, std::size_t cap) {
  const auto start = Clock::now();
  check_same_d(family, x);
  const int n_total = x.n_sites() + 1;

  const StateVector psi = build_statevector(family, n_total, cap);
  ComplexVector transformed = psi.amplitudes;

  if (x.form() == LocalObservable::Form::Product) {
    const auto& factors = x.factors();
    for (int k = 1; k <= x.n_sites(); ++k) {
      apply_single_site(transformed, family.d(), n_total, k,
                        factors[static_cast<std::size_t>(k - 1)]);
    }
  } else {
    // View psi as a (d^N x d) matrix: rows index the observed sites,
    // columns the extra traced site.
    const Eigen::Index rows = x.matrix().rows();
    const Eigen::Index cols = static_cast<Eigen::Index>(family.d());
    Eigen::Map<ComplexMatrix> block(transformed.data(), rows, cols);
    block = (x.matrix() * block).eval();
  }

  EvaluationReport report;
  report.value = psi.amplitudes.dot(transformed);
  report.method = "naive";
  report.n_sites = x.n_sites();
  report.elapsed_ms = ms_since(start);
  return report;
}

EvaluationReport evaluate_transfer(const MPSFamily& family,
                                   const LocalObservable& x) {
  const auto start = Clock::now();
  if (x.form() != LocalObservable::Form::Product) {
    throw UnsupportedFormError(
        "the transfer route requires a product-form observable");
  }
  check_same_d(family, x);

  const int n = x.n_sites();
  const auto& factors = x.factors();
  ComplexMatrix acc = transfer_factor(family, 1, factors[0]);
  for (int k = 2; k <= n; ++k) {
    acc = acc * transfer_factor(family, k, factors[static_cast<std::size_t>(k - 1)]);
  }

  const int m = family.m();
  ComplexMatrix boundary = ComplexMatrix::Zero(m * m, m * m);
  for (int l = 0; l < family.d(); ++l) {
    const ComplexMatrix& a_l = family.tensor(n + 1, l);
    boundary += kron(a_l.conjugate(), a_l);
  }

  EvaluationReport report;
  report.value = (acc * boundary).trace();
  report.method = "transfer";
  report.n_sites = n;
  report.elapsed_ms = ms_since(start);
  return report;
}

DensityMatrix reduced_density_matrix(const MPSFamily& family, int n_sites,
                                     std::size_t cap) {
  if (n_sites < 1) {
    throw ArgumentError("reduced_density_matrix requires n_sites >= 1");
  }
  const ConditionReport norm_report = check_normalization(family);
  const int cons_n_max = family.tail() == Tail::RepeatLast
                             ? family.explicit_site_count() + 1
                             : family.explicit_site_count() - 1;
  const bool conditions_ok =
      norm_report.pass &&
      (cons_n_max < 1 || check_consistency(family, cons_n_max).pass);

  const StateVector psi = build_statevector(family, n_sites + 1, cap);
  const int d = family.d();
  const Eigen::Index kept = psi.amplitudes.size() / d;

  // Same contraction as partial_trace_last on |psi><psi|, without
  // materializing the outer product.
  DensityMatrix rho;
  rho.n_sites = n_sites;
  rho.d = d;
  rho.matrix = ComplexMatrix::Zero(kept, kept);
  for (Eigen::Index a = 0; a < kept; ++a) {
    for (Eigen::Index b = 0; b < kept; ++b) {
      Complex sum = 0.0;
      for (int l = 0; l < d; ++l) {
        sum += psi.amplitudes[a * d + l] * std::conj(psi.amplitudes[b * d + l]);
      }
      rho.matrix(a, b) = sum;
    }
  }

  try {
    validate_density_matrix(rho);
  } catch (const ValidationError& err) {
    if (!conditions_ok) {
      throw ValidationError(
          std::string(err.what()) +
          "; the family fails the normalization/consistency conditions, so "
          "no trace-one limit state is guaranteed");
    }
    throw;
  }
  return rho;
}

void validate_density_matrix(const DensityMatrix& rho, double tol) {
  const ComplexMatrix& m = rho.matrix;
  if (m.rows() != m.cols()) {
    throw ValidationError("density matrix must be square");
  }
  const std::size_t side = detail::pow_or_limit(rho.d, rho.n_sites, std::size_t{1} << 62);
  if (static_cast<std::size_t>(m.rows()) != side) {
    throw ValidationError("density matrix side must equal d^n_sites");
  }
  const double herm_defect = (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm_defect > tol) {
    throw ValidationError("density matrix is not Hermitian within " +
                          std::to_string(tol));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
    throw ValidationError("density matrix trace deviates from 1 by " +
                          std::to_string(std::abs(tr - Complex{1.0, 0.0})));
  }
  const std::vector<double> evs = hermitian_eigenvalues(m, tol);
  if (!evs.empty() && evs.back() < -tol) {
    throw ValidationError("density matrix has eigenvalue " +
                          std::to_string(evs.back()) + " below -tolerance");
  }
}

double von_neumann_entropy(const DensityMatrix& rho, EntropyBase base) {
  validate_density_matrix(rho);
  constexpr double cutoff = 1e-12;
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix)) {
    if (lambda > cutoff) {
      s -= lambda * std::log(lambda);
    }
  }
  return base == EntropyBase::Two ? s / std::log(2.0) : s;
}

ConditionReport check_projectivity(const MPSFamily& family,
                                   const LocalObservable& x, int k_max,
                                   double tol, std::size_t cap) {
  if (k_max < 0) {
    throw ArgumentError("check_projectivity requires k_max >= 0");
  }
  ConditionReport report;
  report.condition_name = "projectivity";
  report.tolerance = tol;
  report.pass = true;

  const Complex base_value = evaluate_naive(family, x, cap).value;
  for (int k = 0; k <= k_max; ++k) {
    const Complex value = k == 0
                              ? base_value
                              : evaluate_naive(family, x.padded(k), cap).value;
    report.checked_sites.push_back(x.n_sites() + k);
    report.residuals.push_back(std::abs(value - base_value));
    if (report.residuals.back() > tol) {
      report.pass = false;
    }
  }
  report.notes =
      "values of the padded observable X (x) 1^k for k = 0.." +
      std::to_string(k_max) +
      " compared against k = 0; a pass means the expectation has already "
      "stabilized at this region size";
  return report;
}

}  // namespace mpschain
