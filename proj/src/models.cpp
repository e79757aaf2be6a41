#include "mpschain/models.hpp"

#include <cmath>

#include "mpschain/conditions.hpp"

namespace mpschain {

MPSFamily ghz_family() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;

  SiteTensors first{{inv_sqrt2 * p0, inv_sqrt2 * p1}};
  SiteTensors rest{{p0, p1}};
  return MPSFamily(2, 2, {std::move(first), std::move(rest)},
                   Tail::RepeatLast);
}

MPSFamily projector_family(const ProjectorFamilySpec& spec) {
  if (spec.d < 1 || spec.m < 1 || spec.d > spec.m) {
    throw ArgumentError("projector_family requires 1 <= d <= m");
  }
  if (static_cast<int>(spec.first_site_coefficients.size()) != spec.d) {
    throw ArgumentError("projector_family requires exactly d coefficients");
  }
  double total = 0.0;
  for (Complex c : spec.first_site_coefficients) {
    total += std::norm(c);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError(
        "coefficient moduli must satisfy sum |c_i|^2 = 1 within 1e-12, got " +
        std::to_string(total));
  }

  SiteTensors first;
  SiteTensors rest;
  for (int i = 0; i < spec.d; ++i) {
    ComplexMatrix p = ComplexMatrix::Zero(spec.m, spec.m);
    p(i, i) = 1.0;
    first.matrices.push_back(spec.first_site_coefficients[static_cast<std::size_t>(i)] * p);
    rest.matrices.push_back(std::move(p));
  }
  MPSFamily family(spec.d, spec.m, {std::move(first), std::move(rest)},
                   Tail::RepeatLast);

  // Orthogonal projectors make both conditions hold exactly; treat any
  // residual above rounding noise as a construction bug.
  if (!check_normalization(family, 1e-12).pass ||
      !check_consistency(family, family.explicit_site_count() + 1, 1e-12)
           .pass) {
    throw ValidationError(
        "projector_family construction failed its own condition checks");
  }
  return family;
}

Complex ghz_expectation_closed_form(std::span<const ComplexMatrix> factors) {
  Complex diag0 = 1.0;
  Complex diag1 = 1.0;
  for (const ComplexMatrix& x : factors) {
    if (x.rows() != 2 || x.cols() != 2) {
      throw DimensionError("closed-form GHZ expectation requires 2x2 factors");
    }
    diag0 *= x(0, 0);
    diag1 *= x(1, 1);
  }
  return 0.5 * (diag0 + diag1);
}

}  // namespace mpschain
