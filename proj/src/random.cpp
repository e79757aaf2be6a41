#include "mpschain/random.hpp"

namespace mpschain {

ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
  ComplexMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out(i, j) = rng.complex_in_square();
    }
  }
  return out;
}

ComplexMatrix random_hermitian(Rng& rng, int side) {
  const ComplexMatrix raw = random_matrix(rng, side, side);
  return 0.5 * (raw + raw.adjoint().eval());
}

ComplexMatrix random_unitary(Rng& rng, int side) {
  const ComplexMatrix raw = random_matrix(rng, side, side);
  Eigen::HouseholderQR<ComplexMatrix> qr(raw);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so Q is unique given the input.
  for (int j = 0; j < side; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) {
      q.col(j) *= diag / mag;
    }
  }
  return q;
}

MPSFamily random_family(Rng& rng, int d, int m, int explicit_sites,
                        Tail tail) {
  std::vector<SiteTensors> sites;
  sites.reserve(static_cast<std::size_t>(explicit_sites));
  for (int n = 0; n < explicit_sites; ++n) {
    SiteTensors site;
    site.matrices.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      site.matrices.push_back(random_matrix(rng, m, m));
    }
    sites.push_back(std::move(site));
  }
  return MPSFamily(d, m, std::move(sites), tail);
}

std::vector<int> random_tuple(Rng& rng, int d, int length) {
  std::vector<int> tuple(static_cast<std::size_t>(length));
  for (int& x : tuple) {
    x = rng.uniform_int(0, d);
  }
  return tuple;
}

}  // namespace mpschain
