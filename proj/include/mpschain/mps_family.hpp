#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mpschain/linalg.hpp"

namespace mpschain {

/// Rule for sites beyond the explicitly listed ones: RepeatLast reuses the
/// final explicit site's tensors forever, Finite rejects such queries.
enum class Tail { RepeatLast, Finite };

/// The d matrices attached to one chain site, one per physical basis label.
/// Labels are 0-based here; conventional 1-based labels i in {1,...,d}
/// map to positions i-1.
struct SiteTensors {
  std::vector<ComplexMatrix> matrices;
};

inline constexpr std::size_t kDefaultAmplitudeCap = std::size_t{1} << 20;

/// A family of m x m site tensors {A_i^[n]} over a spin chain with local
/// dimension d. Immutable after construction and safe to share across
/// threads.
class MPSFamily {
 public:
  MPSFamily(int d, int m, std::vector<SiteTensors> explicit_sites, Tail tail);

  int d() const { return d_; }
  int m() const { return m_; }
  Tail tail() const { return tail_; }
  int explicit_site_count() const { return static_cast<int>(sites_.size()); }

  /// Tensors for chain site n (sites are numbered from 1), applying the
  /// tail rule. Throws RangeError for n out of range under a Finite tail.
  const SiteTensors& site(int n) const;

  /// Tensor A_i^[n] with 0-based physical label i.
  const ComplexMatrix& tensor(int n, int i) const;

 private:
  int d_;
  int m_;
  Tail tail_;
  std::vector<SiteTensors> sites_;
};

/// Amplitudes of |psi_n> in lexicographic order with the site-1 label most
/// significant: index = ((i_1*d + i_2)*d + ...)*d + i_n.
struct StateVector {
  int n_sites = 0;
  int d = 0;
  ComplexVector amplitudes;
};

/// Tr(A_{i_1}^[1] ... A_{i_n}^[n]) for 0-based labels, unnormalized trace.
Complex amplitude(const MPSFamily& family, std::span<const int> indices);

/// All d^n amplitudes of |psi_n>. Throws ResourceError when d^n exceeds
/// the cap. Honors the MPSCHAIN_THREADS environment variable; the result
/// is bit-identical for every thread count.
StateVector build_statevector(const MPSFamily& family, int n,
                              std::size_t cap = kDefaultAmplitudeCap);

/// ||psi_n||^2.
double norm_squared(const MPSFamily& family, int n,
                    std::size_t cap = kDefaultAmplitudeCap);

}  // namespace mpschain
