#pragma once

#include <span>
#include <vector>

#include "mpschain/mps_family.hpp"

namespace mpschain {

/// The GHZ family: d = 2, m = 2, site-1 tensors (1/sqrt2) diag(1,0) and
/// (1/sqrt2) diag(0,1), every later site diag(1,0) and diag(0,1) via a
/// RepeatLast tail. Satisfies both state-extension conditions with
/// residuals at floating-point zero.
MPSFamily ghz_family();

/// Constructive generator of condition-satisfying families: site-1 tensors
/// c_i |i><i| on bond dimension m, tail tensors |i><i|. Requires d <= m and
/// sum_i |c_i|^2 = 1 (rank-one projectors have unit trace).
struct ProjectorFamilySpec {
  int m = 0;
  int d = 0;
  std::vector<Complex> first_site_coefficients;
};

MPSFamily projector_family(const ProjectorFamilySpec& spec);

/// Closed-form GHZ expectation of X_1 (x) ... (x) X_N:
///   (1/2) (prod_k <0|X_k|0> + prod_k <1|X_k|1>).
/// Independent of both evaluation engines; used as an oracle.
Complex ghz_expectation_closed_form(std::span<const ComplexMatrix> factors);

}  // namespace mpschain
