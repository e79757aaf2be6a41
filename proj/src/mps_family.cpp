#include "mpschain/mps_family.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace mpschain {

namespace {

int env_thread_count() {
  const char* raw = std::getenv("MPSCHAIN_THREADS");
  if (raw == nullptr) {
    return 1;
  }
  const long parsed = std::strtol(raw, nullptr, 10);
  if (parsed < 1) {
    return 1;
  }
  return static_cast<int>(std::min(parsed, 64L));
}

// Amplitude for the tuple encoded by `index`, decoding digits with the
// site-1 label most significant. Shares the exact multiplication order
// with amplitude() so the two routes agree bit-for-bit.
Complex amplitude_at(const MPSFamily& family, int n, std::size_t index) {
  const int d = family.d();
  std::vector<int> digits(static_cast<std::size_t>(n));
  std::size_t rem = index;
  for (int k = n - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(rem % d);
    rem /= d;
  }
  return amplitude(family, digits);
}

}  // namespace

MPSFamily::MPSFamily(int d, int m, std::vector<SiteTensors> explicit_sites,
                     Tail tail)
    : d_(d), m_(m), tail_(tail), sites_(std::move(explicit_sites)) {
  if (d_ < 1 || m_ < 1) {
    throw ArgumentError("MPSFamily requires positive d and m");
  }
  if (sites_.empty()) {
    throw ArgumentError("MPSFamily requires at least one explicit site");
  }
  for (std::size_t n = 0; n < sites_.size(); ++n) {
    if (static_cast<int>(sites_[n].matrices.size()) != d_) {
      throw ArgumentError("site " + std::to_string(n + 1) + " holds " +
                          std::to_string(sites_[n].matrices.size()) +
                          " tensors, expected d = " + std::to_string(d_));
    }
    for (const ComplexMatrix& a : sites_[n].matrices) {
      if (a.rows() != m_ || a.cols() != m_) {
        throw DimensionError("site tensors must be m x m with m = " +
                             std::to_string(m_));
      }
    }
  }
}

const SiteTensors& MPSFamily::site(int n) const {
  if (n < 1) {
    throw RangeError("site index must be >= 1, got " + std::to_string(n));
  }
  const int count = explicit_site_count();
  if (n <= count) {
    return sites_[static_cast<std::size_t>(n - 1)];
  }
  if (tail_ == Tail::Finite) {
    throw RangeError("site " + std::to_string(n) +
                     " is beyond the last explicit site (" +
                     std::to_string(count) + ") of a finite family");
  }
  return sites_.back();
}

const ComplexMatrix& MPSFamily::tensor(int n, int i) const {
  if (i < 0 || i >= d_) {
    throw ArgumentError("physical label must lie in [0, d), got " +
                        std::to_string(i));
  }
  return site(n).matrices[static_cast<std::size_t>(i)];
}

Complex amplitude(const MPSFamily& family, std::span<const int> indices) {
  if (indices.empty()) {
    throw ArgumentError("amplitude requires a non-empty index tuple");
  }
  ComplexMatrix acc = family.tensor(1, indices[0]);
  for (std::size_t k = 1; k < indices.size(); ++k) {
    acc = acc * family.tensor(static_cast<int>(k) + 1, indices[k]);
  }
  return acc.trace();
}

StateVector build_statevector(const MPSFamily& family, int n,
                              std::size_t cap) {
  if (n < 1) {
    throw ArgumentError("build_statevector requires n >= 1");
  }
  const std::size_t count = detail::pow_or_limit(family.d(), n, cap);
  if (count == SIZE_MAX) {
    throw ResourceError("d^n exceeds the amplitude cap (" +
                        std::to_string(cap) + "); raise the cap to proceed");
  }
  family.site(n);  // surfaces RangeError for finite tails before any work

  StateVector psi;
  psi.n_sites = n;
  psi.d = family.d();
  psi.amplitudes.resize(static_cast<Eigen::Index>(count));

  const int threads = env_thread_count();
  auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      psi.amplitudes[static_cast<Eigen::Index>(idx)] =
          amplitude_at(family, n, idx);
    }
  };

  if (threads == 1 || count < 1024) {
    fill(0, count);
  } else {
    // Contiguous slices; each amplitude is written by exactly one thread,
    // so the result matches the sequential fill bit-for-bit.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::size_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(count, chunk * static_cast<std::size_t>(t));
      const std::size_t hi = std::min(count, lo + chunk);
      if (lo < hi) {
        pool.emplace_back(fill, lo, hi);
      }
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }
  return psi;
}

double norm_squared(const MPSFamily& family, int n, std::size_t cap) {
  const StateVector psi = build_statevector(family, n, cap);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
    sum += std::norm(psi.amplitudes[i]);
  }
  return sum;
}

}  // namespace mpschain
