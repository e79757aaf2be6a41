#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_helpers.hpp"

using namespace mpstest;

TEST_CASE("dagger: conjugate transpose") {
  const ComplexMatrix m = mat2(0, 1, 0, 0);
  check_matrix_close(dagger(m), mat2(0, 0, 1, 0), 0.0);
  check_matrix_close(dagger(eye(2)), eye(2), 0.0);

  const ComplexMatrix im = mat2(Complex{0, 1}, 0, 0, 0);
  check_matrix_close(dagger(im), mat2(Complex{0, -1}, 0, 0, 0), 0.0);

  Rng rng(11);
  const ComplexMatrix r = random_matrix(rng, 3, 5);
  check_matrix_close(dagger(dagger(r)), r, 0.0);
}

TEST_CASE("trace: normalized and unnormalized") {
  CHECK_EQ(trace(eye(4), false), Complex{4.0, 0.0});
  CHECK_EQ(trace(eye(4), true), Complex{1.0, 0.0});

  const double s = 1.0 / std::sqrt(2.0);
  CHECK_EQ(trace(mat2(s, 0, 0, 0), false), Complex{s, 0.0});
}

TEST_CASE("trace: non-square rejected") {
  ComplexMatrix m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(trace(m, false), DimensionError);
}

TEST_CASE("kron: dimensions and block structure") {
  check_matrix_close(kron(eye(2), eye(2)), eye(4), 0.0);

  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  check_matrix_close(kron(mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)), expected, 0.0);

  // A = |0><1| places B in the top-right block.
  const ComplexMatrix k = kron(mat2(0, 1, 0, 0), eye(2));
  ComplexMatrix top_right = ComplexMatrix::Zero(4, 4);
  top_right(0, 2) = 1.0;
  top_right(1, 3) = 1.0;
  check_matrix_close(k, top_right, 0.0);
}

TEST_CASE("chain_product: order and errors") {
  std::vector<ComplexMatrix> ids{eye(2), eye(2)};
  check_matrix_close(chain_product(ids), eye(2), 0.0);

  std::vector<ComplexMatrix> orth{mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)};
  check_matrix_close(chain_product(orth), ComplexMatrix::Zero(2, 2), 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> ghz{s * mat2(1, 0, 0, 0), mat2(1, 0, 0, 0),
                                 mat2(1, 0, 0, 0)};
  check_matrix_close(chain_product(ghz), s * mat2(1, 0, 0, 0), 0.0);

  CHECK_THROWS_AS(chain_product(std::vector<ComplexMatrix>{}), ArgumentError);
  std::vector<ComplexMatrix> mismatched{eye(2), eye(3)};
  CHECK_THROWS_AS(chain_product(mismatched), DimensionError);

  // Non-commuting factors: the product must respect left-to-right order.
  std::vector<ComplexMatrix> xz{pauli_x(), pauli_z()};
  check_matrix_close(chain_product(xz), mat2(0, -1, 1, 0), 0.0);
}

TEST_CASE("hermitian_eigenvalues: descending, validated") {
  ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
  diag(0, 0) = 0.5;
  diag(1, 1) = 0.5;
  const std::vector<double> vals = hermitian_eigenvalues(diag);
  REQUIRE_EQ(vals.size(), 4);
  CHECK_EQ(vals[0], doctest::Approx(0.5).epsilon(1e-14));
  CHECK_EQ(vals[1], doctest::Approx(0.5).epsilon(1e-14));
  CHECK_EQ(vals[2], doctest::Approx(0.0).epsilon(1e-14));
  CHECK_EQ(vals[3], doctest::Approx(0.0).epsilon(1e-14));

  const std::vector<double> ones = hermitian_eigenvalues(eye(3));
  for (double v : ones) {
    CHECK_EQ(v, doctest::Approx(1.0).epsilon(1e-14));
  }

  // 0.5(|00><00| + |11><11|), frozen from the statevector oracle below.
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  const std::vector<double> ghz_vals = hermitian_eigenvalues(rho);
  CHECK_EQ(ghz_vals[0], doctest::Approx(0.5).epsilon(1e-14));
  CHECK_EQ(ghz_vals[1], doctest::Approx(0.5).epsilon(1e-14));
  CHECK_EQ(ghz_vals[2], doctest::Approx(0.0).epsilon(1e-14));

  CHECK_THROWS_AS(hermitian_eigenvalues(mat2(0, 1, 0, 0)), ValidationError);
}

TEST_CASE("partial_trace_last: product states and GHZ") {
  // |00><00| -> |0><0|
  ComplexMatrix p00 = ComplexMatrix::Zero(4, 4);
  p00(0, 0) = 1.0;
  check_matrix_close(partial_trace_last(p00, {2, 2}, 1, false),
                     mat2(1, 0, 0, 0), 0.0);

  // A (x) I with the normalized trace recovers A.
  Rng rng(7);
  const ComplexMatrix a = random_matrix(rng, 2, 2);
  check_matrix_close(partial_trace_last(kron(a, eye(2)), {2, 2}, 1, true), a,
                     1e-15);

  // Three-qubit GHZ projector: oracle is an explicit index-summed partial
  // trace of the 8x8 outer product.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector ghz = ComplexVector::Zero(8);
  ghz(0) = s;
  ghz(7) = s;
  const ComplexMatrix outer = ghz * ghz.adjoint();

  ComplexMatrix oracle = ComplexMatrix::Zero(4, 4);
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      for (int b1 = 0; b1 < 2; ++b1) {
        for (int b2 = 0; b2 < 2; ++b2) {
          for (int l = 0; l < 2; ++l) {
            oracle(a1 * 2 + a2, b1 * 2 + b2) +=
                outer(a1 * 4 + a2 * 2 + l, b1 * 4 + b2 * 2 + l);
          }
        }
      }
    }
  }
  const ComplexMatrix traced = partial_trace_last(outer, {2, 3}, 1, false);
  check_matrix_close(traced, oracle, 0.0);

  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = std::norm(s);
  expected(3, 3) = std::norm(s);
  check_matrix_close(traced, expected, 1e-15);

  CHECK_THROWS_AS(partial_trace_last(p00, {2, 2}, 2, false), ArgumentError);
  CHECK_THROWS_AS(partial_trace_last(p00, {2, 3}, 1, false), DimensionError);
}

TEST_CASE("property: trace cyclicity and conjugation") {
  Rng rng(101);
  for (int rep = 0; rep < 50; ++rep) {
    const int side = rng.uniform_int(1, 6);
    const ComplexMatrix a = random_matrix(rng, side, side);
    const ComplexMatrix b = random_matrix(rng, side, side);
    check_close(trace(a * b), trace(b * a), 1e-12, 1e-12);
    check_close(std::conj(trace(a)), trace(dagger(a)), 0.0, 0.0);
  }
}

TEST_CASE("property: trace is multiplicative over kron") {
  Rng rng(102);
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexMatrix a = random_matrix(rng, rng.uniform_int(1, 5), 1).eval();
    const int sa = rng.uniform_int(1, 5);
    const int sb = rng.uniform_int(1, 5);
    const ComplexMatrix ma = random_matrix(rng, sa, sa);
    const ComplexMatrix mb = random_matrix(rng, sb, sb);
    check_close(trace(kron(ma, mb)), trace(ma) * trace(mb), 1e-12, 1e-12);
  }
}

TEST_CASE("property: unnormalized partial trace preserves the trace") {
  Rng rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    const int d = rng.uniform_int(2, 4);
    const int n = rng.uniform_int(2, 4);
    const int k = rng.uniform_int(1, n);
    const int side = static_cast<int>(detail::pow_or_limit(d, n, 1u << 20));
    const ComplexMatrix h = random_hermitian(rng, side);
    const ComplexMatrix reduced = partial_trace_last(h, {d, n}, k, false);
    check_close(trace(reduced), trace(h), 1e-10, 1e-12);
  }
}

TEST_CASE("property: eigenvalues sum to the trace") {
  Rng rng(104);
  for (int rep = 0; rep < 20; ++rep) {
    const int side = rng.uniform_int(1, 8);
    const ComplexMatrix h = random_hermitian(rng, side);
    double sum = 0.0;
    for (double v : hermitian_eigenvalues(h)) {
      sum += v;
    }
    const double tr = trace(h).real();
    CHECK_LE(std::abs(sum - tr), 1e-10 * (1.0 + std::abs(tr)));
  }
}
