#pragma once

#include <string>
#include <vector>

#include "mpschain/conditions.hpp"

namespace mpschain {

/// Observable on chain sites [1, N]: either a tensor product of per-site
/// d x d factors or one dense matrix of side d^N.
class LocalObservable {
 public:
  enum class Form { Product, Dense };

  static LocalObservable product(std::vector<ComplexMatrix> factors);
  static LocalObservable dense(int d, int n_sites, ComplexMatrix matrix);

  Form form() const { return form_; }
  int d() const { return d_; }
  int n_sites() const { return n_sites_; }

  const std::vector<ComplexMatrix>& factors() const;
  const ComplexMatrix& matrix() const;

  /// Same observable extended by `extra` identity factors.
  LocalObservable padded(int extra) const;

 private:
  LocalObservable() = default;

  Form form_ = Form::Product;
  int d_ = 0;
  int n_sites_ = 0;
  std::vector<ComplexMatrix> factors_;
  ComplexMatrix matrix_;
};

/// Positive trace-one operator on sites [1, n_sites].
struct DensityMatrix {
  ComplexMatrix matrix;
  int n_sites = 0;
  int d = 0;
};

struct EvaluationReport {
  Complex value;
  std::string method;
  int n_sites = 0;
  double elapsed_ms = 0.0;
};

enum class EntropyBase { Natural, Two };

/// Statevector route: builds |psi_{N+1}> and returns
/// <psi_{N+1}| X (x) 1 |psi_{N+1}>. Exponential in N; serves as the
/// oracle for the transfer route. Accepts both observable forms.
EvaluationReport evaluate_naive(const MPSFamily& family,
                                const LocalObservable& x,
                                std::size_t cap = kDefaultAmplitudeCap);

/// Transfer-operator route, product form only:
///   value = Tr[ E_1(X_1) E_2(X_2) ... E_N(X_N) * F ]
/// with site factors E_k(X) = sum_{i,j} <i|X|j> conj(A_i^[k]) (x) A_j^[k]
/// (entrywise conjugate, no transpose) and the boundary factor
/// F = sum_l conj(A_l^[N+1]) (x) A_l^[N+1] from the extra traced site.
/// Cost O(N d^2 m^4 + N m^6); no statevector is built.
EvaluationReport evaluate_transfer(const MPSFamily& family,
                                   const LocalObservable& x);

/// rho_[1,N]: the last site of |psi_{N+1}><psi_{N+1}| traced out with the
/// unnormalized trace. Both state-extension conditions are checked first;
/// if they fail and the result violates the density-matrix invariants,
/// throws ValidationError naming the failed condition.
DensityMatrix reduced_density_matrix(const MPSFamily& family, int n_sites,
                                     std::size_t cap = kDefaultAmplitudeCap);

/// Throws ValidationError unless rho is Hermitian within tol, has
/// unnormalized trace 1 within tol, and eigenvalues >= -tol.
void validate_density_matrix(const DensityMatrix& rho,
                             double tol = kDefaultHermitianTol);

/// -sum lambda log lambda over eigenvalues above the 1e-12 cutoff.
double von_neumann_entropy(const DensityMatrix& rho,
                           EntropyBase base = EntropyBase::Natural);

/// Evaluates the state on X padded with 0..k_max identity factors via the
/// naive route; passes iff every padded value matches the unpadded one
/// within tol. A pass witnesses strongly-finite stabilization of the
/// sequence at this observable.
ConditionReport check_projectivity(const MPSFamily& family,
                                   const LocalObservable& x, int k_max,
                                   double tol = kDefaultResidualTol,
                                   std::size_t cap = kDefaultAmplitudeCap);

}  // namespace mpschain
