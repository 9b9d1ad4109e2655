#include "gravsim/kernels/kernels.hpp"

// Reference kernels. Plain loops, fixed left-to-right accumulation order;
// the vector backends are tested against these.

namespace gravsim::kernels {
namespace {

void s_cmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void s_cmul_inplace(cplx* psi, const cplx* f, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) psi[i] *= f[i];
}

void s_scale_inplace(cplx* psi, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) psi[i] *= s;
}

double s_norm_sq_sum(const cplx* psi, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += psi[i].real() * psi[i].real() + psi[i].imag() * psi[i].imag();
    return acc;
}

cplx s_inner_sum(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return cplx{re, im};
}

Moments s_moments(const cplx* psi, double x0, double dx, std::size_t n) {
    double w = 0.0, xw = 0.0, x2w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = psi[i].real() * psi[i].real() + psi[i].imag() * psi[i].imag();
        const double x = x0 + static_cast<double>(i) * dx;
        w += p;
        xw += x * p;
        x2w += x * x * p;
    }
    return Moments{w, xw, x2w};
}

void s_fft_stage(cplx* data, std::size_t n, std::size_t len, const cplx* w) {
    const std::size_t half = len / 2;
    for (std::size_t block = 0; block < n; block += len) {
        for (std::size_t j = 0; j < half; ++j) {
            cplx* lo = data + block + j;
            cplx* hi = lo + half;
            const cplx t = *hi * w[j];
            *hi = *lo - t;
            *lo += t;
        }
    }
}

}  // namespace

const OpsTable& scalar_ops() {
    static const OpsTable table{s_cmul,      s_cmul_inplace, s_scale_inplace,
                                s_norm_sq_sum, s_inner_sum,  s_moments,
                                s_fft_stage};
    return table;
}

}  // namespace gravsim::kernels
