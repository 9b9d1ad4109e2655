#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gravsim/kernels/kernels.hpp"

namespace gravsim::kernels {

// In-place radix-2 complex FFT for power-of-two sizes. Twiddles and the
// bit-reversal permutation are precomputed at plan construction; the
// butterfly passes run through the active kernel backend. forward() applies
// no scaling, inverse() scales by 1/n, so inverse(forward(x)) == x.
class Fft {
  public:
    explicit Fft(std::size_t n);

    void forward(std::span<cplx> data) const;
    void inverse(std::span<cplx> data) const;

    std::size_t size() const { return n_; }

  private:
    void transform(std::span<cplx> data, const std::vector<cplx>& twiddles) const;

    std::size_t n_;
    std::size_t log2n_;
    std::vector<std::size_t> bitrev_;
    // Stage-packed twiddle tables: stage with half-length h occupies
    // [h - 1, 2h - 1).
    std::vector<cplx> twiddle_fwd_;
    std::vector<cplx> twiddle_inv_;
};

}  // namespace gravsim::kernels
