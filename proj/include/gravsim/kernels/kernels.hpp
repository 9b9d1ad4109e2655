#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace gravsim::kernels {

using cplx = std::complex<double>;

// Inner-loop backends. "scalar" is the reference implementation; vector
// variants must agree with it elementwise to rounding and are selected at
// runtime from CPU capabilities.
enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_supported(Backend b);
// Throws std::invalid_argument if the CPU lacks the requested backend.
void set_backend(Backend b);
// Re-detect and select the best supported backend.
void reset_backend();
std::string_view backend_name(Backend b);

// out[i] = a[i] * b[i]
void cmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
// psi[i] *= f[i]
void cmul_inplace(std::span<cplx> psi, std::span<const cplx> f);
// psi[i] *= s
void scale_inplace(std::span<cplx> psi, double s);
// sum_i |psi[i]|^2
double norm_sq_sum(std::span<const cplx> psi);
// sum_i conj(a[i]) * b[i]
cplx inner_sum(std::span<const cplx> a, std::span<const cplx> b);

// Zeroth/first/second moments of |psi|^2 against x_j = x0 + j*dx.
struct Moments {
    double w_sum;
    double xw_sum;
    double x2w_sum;
};
Moments moments(std::span<const cplx> psi, double x0, double dx);

// Function-pointer table backing the public entry points; one instance per
// backend. Exposed so variants can be tested against each other directly.
struct OpsTable {
    void (*cmul)(const cplx*, const cplx*, cplx*, std::size_t);
    void (*cmul_inplace)(cplx*, const cplx*, std::size_t);
    void (*scale_inplace)(cplx*, double, std::size_t);
    double (*norm_sq_sum)(const cplx*, std::size_t);
    cplx (*inner_sum)(const cplx*, const cplx*, std::size_t);
    Moments (*moments)(const cplx*, double, double, std::size_t);
    // Radix-2 DIT butterfly pass over one FFT stage: for each block of
    // length `len` starting at multiples of `len`, combine pairs separated
    // by len/2 with twiddles w[0..len/2).
    void (*fft_stage)(cplx*, std::size_t n, std::size_t len, const cplx* w);
};

const OpsTable& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const OpsTable& avx2_ops();
#endif
const OpsTable& active_ops();

}  // namespace gravsim::kernels
