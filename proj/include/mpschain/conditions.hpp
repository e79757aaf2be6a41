#pragma once

#include <span>
#include <string>
#include <vector>

#include "mpschain/mps_family.hpp"

namespace mpschain {

inline constexpr double kDefaultResidualTol = 1e-10;

/// Outcome of a numerical hypothesis check: one residual per checked site,
/// pass iff every residual is within tolerance.
struct ConditionReport {
  std::string condition_name;
  bool pass = false;
  std::vector<int> checked_sites;
  std::vector<double> residuals;
  double tolerance = 0.0;
  std::string notes;
};

/// Normalization condition on the site-1 tensors. Gates on the
/// squared-modulus sum s2 = sum_i |Tr A_i^[1]|^2 being 1; the literal sum
/// s1 = sum_i |Tr A_i^[1]| is recorded in the notes alongside s2.
ConditionReport check_normalization(const MPSFamily& family,
                                    double tol = kDefaultResidualTol);

/// Operator consistency condition at sites n = 1..n_max: for every
/// physical label i,
///   sum_j (A_j^[n+1])^dg (A_i^[n])^dg (x) A_i^[n] A_j^[n+1]
///     = (A_i^[n])^dg (x) A_i^[n].
/// The per-site residual is the max over i of the Frobenius norm of the
/// defect (Frobenius so the residual is invariant under simultaneous
/// unitary conjugation of all tensors). For RepeatLast families, sites
/// past the explicit list repeat, so n_max = explicit count + 1 covers
/// every n; the report notes this when it applies.
ConditionReport check_consistency(const MPSFamily& family, int n_max,
                                  double tol = kDefaultResidualTol);

/// Both sides of the double-trace split identity at position n.
struct TraceIdentityCheck {
  Complex lhs;        // conj(Tr prod A_left) * Tr(prod A_right)
  Complex rhs;        // single trace over the m^2-dimensional split
  double deviation;   // |lhs - rhs|
};

/// Evaluates, for index tuples `left` and `right` of length n + k,
///   conj(Tr(A_{l_1}^[1] ... A_{l_{n+k}}^[n+k])) Tr(A_{r_1}^[1] ... A_{r_{n+k}}^[n+k])
/// against the single trace of
///   (A_{l_n}^dg...A_{l_1}^dg (x) A_{r_1}...A_{r_n}) *
///   (A_{l_{n+k}}^dg...A_{l_{n+1}}^dg (x) A_{r_{n+1}}...A_{r_{n+k}}).
/// The identity holds for arbitrary families; no hypotheses are needed.
TraceIdentityCheck evaluate_trace_identity(const MPSFamily& family, int n,
                                           int k, std::span<const int> left,
                                           std::span<const int> right);

/// True iff the two sides agree within the combined tolerance
/// deviation <= tol * (1 + |lhs|).
bool verify_trace_identity(const MPSFamily& family, int n, int k,
                           std::span<const int> left,
                           std::span<const int> right,
                           double tol = kDefaultResidualTol);

}  // namespace mpschain
