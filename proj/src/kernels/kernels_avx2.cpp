#include "gravsim/kernels/kernels.hpp"

// AVX2+FMA variants. A __m256d holds two complex doubles as
// [re0, im0, re1, im1]; loads are unaligned. Reductions keep four partial
// lanes and combine them in a fixed order, so results are deterministic but
// may differ from the scalar backend by rounding (covered by the
// equivalence tests).

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace gravsim::kernels {
namespace {

// [a0*b0 - a0i*b0i, a0*b0i + a0i*b0, ...] for two packed complexes.
inline __m256d cmul2(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline const double* dp(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dp(cplx* p) { return reinterpret_cast<double*>(p); }

void v_cmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dp(a + i));
        const __m256d vb = _mm256_loadu_pd(dp(b + i));
        _mm256_storeu_pd(dp(out + i), cmul2(va, vb));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void v_cmul_inplace(cplx* psi, const cplx* f, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vp = _mm256_loadu_pd(dp(psi + i));
        const __m256d vf = _mm256_loadu_pd(dp(f + i));
        _mm256_storeu_pd(dp(psi + i), cmul2(vp, vf));
    }
    for (; i < n; ++i) psi[i] *= f[i];
}

void v_scale_inplace(cplx* psi, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(dp(psi + i), _mm256_mul_pd(_mm256_loadu_pd(dp(psi + i)), vs));
    for (; i < n; ++i) psi[i] *= s;
}

double v_norm_sq_sum(const cplx* psi, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(dp(psi + i));
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i)
        total += psi[i].real() * psi[i].real() + psi[i].imag() * psi[i].imag();
    return total;
}

cplx v_inner_sum(const cplx* a, const cplx* b, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();  // lanes: ar*br, ai*bi pairs
    __m256d acc_im = _mm256_setzero_pd();  // lanes: ai*br, ar*bi pairs
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dp(a + i));
        const __m256d vb = _mm256_loadu_pd(dp(b + i));
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), vb, acc_im);
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, acc_re);
    _mm256_store_pd(im4, acc_im);
    // conj(a)*b: re = ar*br + ai*bi, im = ar*bi - ai*br
    double re = (re4[0] + re4[1]) + (re4[2] + re4[3]);
    double im = (im4[1] - im4[0]) + (im4[3] - im4[2]);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return cplx{re, im};
}

Moments v_moments(const cplx* psi, double x0, double dx, std::size_t n) {
    __m256d acc_w = _mm256_setzero_pd();
    __m256d acc_xw = _mm256_setzero_pd();
    __m256d acc_x2w = _mm256_setzero_pd();
    const __m256d vx0 = _mm256_set1_pd(x0);
    const __m256d vdx = _mm256_set1_pd(dx);
    __m256d vj = _mm256_setr_pd(0.0, 0.0, 1.0, 1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(dp(psi + i));
        const __m256d sq = _mm256_mul_pd(v, v);
        const __m256d w = _mm256_hadd_pd(sq, sq);  // [w0, w0, w1, w1]
        // x = x0 + j*dx, mul-then-add to match the scalar reference bitwise
        const __m256d x = _mm256_add_pd(vx0, _mm256_mul_pd(vj, vdx));
        acc_w = _mm256_add_pd(acc_w, w);
        acc_xw = _mm256_fmadd_pd(x, w, acc_xw);
        acc_x2w = _mm256_fmadd_pd(_mm256_mul_pd(x, x), w, acc_x2w);
        vj = _mm256_add_pd(vj, two);
    }
    alignas(32) double w4[4], xw4[4], x2w4[4];
    _mm256_store_pd(w4, acc_w);
    _mm256_store_pd(xw4, acc_xw);
    _mm256_store_pd(x2w4, acc_x2w);
    Moments m{w4[0] + w4[2], xw4[0] + xw4[2], x2w4[0] + x2w4[2]};
    for (; i < n; ++i) {
        const double p = psi[i].real() * psi[i].real() + psi[i].imag() * psi[i].imag();
        const double x = x0 + static_cast<double>(i) * dx;
        m.w_sum += p;
        m.xw_sum += x * p;
        m.x2w_sum += x * x * p;
    }
    return m;
}

void v_fft_stage(cplx* data, std::size_t n, std::size_t len, const cplx* w) {
    const std::size_t half = len / 2;
    if (half == 1) {
        // Contiguous (lo, hi) pairs, twiddle is exactly 1.
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2) {
            const __m256d v = _mm256_loadu_pd(dp(data + i));          // [lo, hi]
            const __m256d s = _mm256_permute2f128_pd(v, v, 0x01);     // [hi, lo]
            const __m256d sum = _mm256_add_pd(v, s);                  // [lo+hi, ..]
            const __m256d dif = _mm256_sub_pd(s, v);                  // [.., lo-hi]
            _mm256_storeu_pd(dp(data + i), _mm256_blend_pd(sum, dif, 0xC));
        }
        return;
    }
    for (std::size_t block = 0; block < n; block += len) {
        for (std::size_t j = 0; j + 2 <= half; j += 2) {
            cplx* lo = data + block + j;
            cplx* hi = lo + half;
            const __m256d vlo = _mm256_loadu_pd(dp(lo));
            const __m256d vhi = _mm256_loadu_pd(dp(hi));
            const __m256d vw = _mm256_loadu_pd(dp(w + j));
            const __m256d t = cmul2(vhi, vw);
            _mm256_storeu_pd(dp(lo), _mm256_add_pd(vlo, t));
            _mm256_storeu_pd(dp(hi), _mm256_sub_pd(vlo, t));
        }
    }
}

}  // namespace

const OpsTable& avx2_ops() {
    static const OpsTable table{v_cmul,        v_cmul_inplace, v_scale_inplace,
                                v_norm_sq_sum, v_inner_sum,    v_moments,
                                v_fft_stage};
    return table;
}

}  // namespace gravsim::kernels

#endif  // x86_64
