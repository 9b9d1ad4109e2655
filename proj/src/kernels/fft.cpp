#include "gravsim/kernels/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gravsim::kernels {

namespace {
bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    if (!is_pow2(n))
        throw std::invalid_argument("Fft: size must be a power of two >= 2");
    log2n_ = 0;
    while ((std::size_t{1} << log2n_) < n) ++log2n_;

    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t bit = 0; bit < log2n_; ++bit)
            if (i & (std::size_t{1} << bit)) r |= std::size_t{1} << (log2n_ - 1 - bit);
        bitrev_[i] = r;
    }

    twiddle_fwd_.resize(n - 1);
    twiddle_inv_.resize(n - 1);
    for (std::size_t half = 1; half < n; half *= 2) {
        const std::size_t offset = half - 1;
        for (std::size_t j = 0; j < half; ++j) {
            const double angle = -std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(half);
            const cplx w{std::cos(angle), std::sin(angle)};
            twiddle_fwd_[offset + j] = w;
            twiddle_inv_[offset + j] = std::conj(w);
        }
    }
}

void Fft::transform(std::span<cplx> data, const std::vector<cplx>& twiddles) const {
    if (data.size() != n_)
        throw std::invalid_argument("Fft: data size does not match the plan");
    cplx* d = data.data();
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t r = bitrev_[i];
        if (i < r) std::swap(d[i], d[r]);
    }
    const OpsTable& ops = active_ops();
    for (std::size_t len = 2; len <= n_; len *= 2) {
        const std::size_t half = len / 2;
        ops.fft_stage(d, n_, len, twiddles.data() + (half - 1));
    }
}

void Fft::forward(std::span<cplx> data) const { transform(data, twiddle_fwd_); }

void Fft::inverse(std::span<cplx> data) const {
    transform(data, twiddle_inv_);
    active_ops().scale_inplace(data.data(), 1.0 / static_cast<double>(n_), n_);
}

}  // namespace gravsim::kernels
