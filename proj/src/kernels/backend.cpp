#include "gravsim/kernels/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace gravsim::kernels {
namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(GRAVSIM_HAVE_AVX2_TU) && \
    (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw std::invalid_argument("kernel backend not supported on this CPU: " +
                                    std::string(backend_name(b)));
    g_backend.store(b, std::memory_order_relaxed);
}

void reset_backend() { g_backend.store(detect_backend(), std::memory_order_relaxed); }

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

const OpsTable& active_ops() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(GRAVSIM_HAVE_AVX2_TU)
    if (active_backend() == Backend::avx2) return avx2_ops();
#endif
    return scalar_ops();
}

void cmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
    active_ops().cmul(a.data(), b.data(), out.data(), a.size());
}

void cmul_inplace(std::span<cplx> psi, std::span<const cplx> f) {
    active_ops().cmul_inplace(psi.data(), f.data(), psi.size());
}

void scale_inplace(std::span<cplx> psi, double s) {
    active_ops().scale_inplace(psi.data(), s, psi.size());
}

double norm_sq_sum(std::span<const cplx> psi) {
    return active_ops().norm_sq_sum(psi.data(), psi.size());
}

cplx inner_sum(std::span<const cplx> a, std::span<const cplx> b) {
    return active_ops().inner_sum(a.data(), b.data(), a.size());
}

Moments moments(std::span<const cplx> psi, double x0, double dx) {
    return active_ops().moments(psi.data(), x0, dx, psi.size());
}

}  // namespace gravsim::kernels
