#include "mpschain/conditions.hpp"

#include <cmath>
#include <cstdio>

namespace mpschain {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate_tuple(const MPSFamily& family, std::span<const int> tuple,
                    std::size_t expected_len, const char* which) {
  if (tuple.size() != expected_len) {
    throw ArgumentError(std::string(which) + " tuple must have length n + k");
  }
  for (int x : tuple) {
    if (x < 0 || x >= family.d()) {
      throw ArgumentError(std::string(which) +
                          " tuple entries must lie in [0, d)");
    }
  }
}

// A_{t_b}^[b]^dg * A_{t_{b-1}}^[b-1]^dg * ... * A_{t_a}^[a]^dg.
ComplexMatrix reversed_adjoint_product(const MPSFamily& family,
                                       std::span<const int> tuple, int a,
                                       int b) {
  ComplexMatrix acc = ComplexMatrix::Identity(family.m(), family.m());
  for (int site = b; site >= a; --site) {
    acc = acc * dagger(family.tensor(site, tuple[static_cast<std::size_t>(site - 1)]));
  }
  return acc;
}

// A_{t_a}^[a] * A_{t_{a+1}}^[a+1] * ... * A_{t_b}^[b].
ComplexMatrix forward_product(const MPSFamily& family,
                              std::span<const int> tuple, int a, int b) {
  ComplexMatrix acc = ComplexMatrix::Identity(family.m(), family.m());
  for (int site = a; site <= b; ++site) {
    acc = acc * family.tensor(site, tuple[static_cast<std::size_t>(site - 1)]);
  }
  return acc;
}

}  // namespace

ConditionReport check_normalization(const MPSFamily& family, double tol) {
  double s1 = 0.0;
  double s2 = 0.0;
  for (int i = 0; i < family.d(); ++i) {
    const double mag = std::abs(family.tensor(1, i).trace());
    s1 += mag;
    s2 += mag * mag;
  }
  ConditionReport report;
  report.condition_name = "normalization";
  report.tolerance = tol;
  report.checked_sites = {1};
  report.residuals = {std::abs(s2 - 1.0)};
  report.pass = report.residuals[0] <= tol;
  report.notes = "gate: squared-modulus sum s2 = " + fmt17(s2) +
                 "; literal sum s1 = " + fmt17(s1) +
                 " (recorded, not gated; the two readings differ whenever "
                 "more than one site-1 tensor has nonzero trace)";
  return report;
}

ConditionReport check_consistency(const MPSFamily& family, int n_max,
                                  double tol) {
  if (n_max < 1) {
    throw ArgumentError("check_consistency requires n_max >= 1");
  }
  family.site(n_max + 1);  // RangeError for finite tails that end too soon

  const int m = family.m();
  ConditionReport report;
  report.condition_name = "consistency";
  report.tolerance = tol;
  report.pass = true;

  for (int n = 1; n <= n_max; ++n) {
    double worst = 0.0;
    for (int i = 0; i < family.d(); ++i) {
      const ComplexMatrix& a_i = family.tensor(n, i);
      const ComplexMatrix a_i_dg = dagger(a_i);
      ComplexMatrix lhs = ComplexMatrix::Zero(m * m, m * m);
      for (int j = 0; j < family.d(); ++j) {
        const ComplexMatrix& a_j = family.tensor(n + 1, j);
        lhs += kron(dagger(a_j) * a_i_dg, a_i * a_j);
      }
      const ComplexMatrix rhs = kron(a_i_dg, a_i);
      worst = std::max(worst, (lhs - rhs).norm());
    }
    report.checked_sites.push_back(n);
    report.residuals.push_back(worst);
    if (worst > tol) {
      report.pass = false;
    }
  }

  if (family.tail() == Tail::RepeatLast &&
      n_max >= family.explicit_site_count() + 1) {
    report.notes =
        "tail repeats the last explicit site, so sites 1.." +
        std::to_string(family.explicit_site_count() + 1) +
        " cover the condition for every n";
  }
  return report;
}

TraceIdentityCheck evaluate_trace_identity(const MPSFamily& family, int n,
                                           int k, std::span<const int> left,
                                           std::span<const int> right) {
  if (n < 1 || k < 0) {
    throw ArgumentError("evaluate_trace_identity requires n >= 1 and k >= 0");
  }
  const std::size_t len = static_cast<std::size_t>(n) + static_cast<std::size_t>(k);
  validate_tuple(family, left, len, "left");
  validate_tuple(family, right, len, "right");

  TraceIdentityCheck check;
  check.lhs = std::conj(amplitude(family, left)) * amplitude(family, right);

  const ComplexMatrix head =
      kron(reversed_adjoint_product(family, left, 1, n),
           forward_product(family, right, 1, n));
  const ComplexMatrix tail =
      kron(reversed_adjoint_product(family, left, n + 1, n + k),
           forward_product(family, right, n + 1, n + k));
  check.rhs = (head * tail).trace();
  check.deviation = std::abs(check.lhs - check.rhs);
  return check;
}

bool verify_trace_identity(const MPSFamily& family, int n, int k,
                           std::span<const int> left,
                           std::span<const int> right, double tol) {
  const TraceIdentityCheck check =
      evaluate_trace_identity(family, n, k, left, right);
  return check.deviation <= tol * (1.0 + std::abs(check.lhs));
}

}  // namespace mpschain
