#include "spdc/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace spdc::kernels {

// ---------------------------------------------------------------------------
// Scalar reference lane
// ---------------------------------------------------------------------------

namespace scalar {

void sellmeier_index(std::span<const double> lam, const SellmeierCoeffs& sc,
                     std::span<double> out) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const double l2 = lam[i] * lam[i];
        out[i] = std::sqrt(sc.a + sc.b / (1.0 - sc.c / l2) - sc.d * l2);
    }
}

// Below this cut sin(x)/x uses the shared series so every lane agrees on the
// removable singularity.
inline constexpr double kSincSeriesCut = 1e-4;

inline double sinc2_point(double x) {
    const double ax = std::fabs(x);
    if (ax < kSincSeriesCut) {
        const double x2 = x * x;
        const double s = 1.0 - x2 * (1.0 / 6.0) + x2 * x2 * (1.0 / 120.0);
        return s * s;
    }
    const double s = std::sin(x) / x;
    return s * s;
}

void sinc2(std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = sinc2_point(x[i]);
}

void gaussian(std::span<const double> x, double mu, double inv_two_sigma2,
              std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - mu;
        out[i] = std::exp(-d * d * inv_two_sigma2);
    }
}

}  // namespace scalar

// ---------------------------------------------------------------------------
// AVX2 lane (separate TU compiled with -mavx2 -mfma)
// ---------------------------------------------------------------------------

#if SPDC_HAVE_AVX2
namespace avx2 {
void sellmeier_index(std::span<const double>, const SellmeierCoeffs&, std::span<double>);
void sinc2(std::span<const double>, std::span<double>);
void gaussian(std::span<const double>, double, double, std::span<double>);
}  // namespace avx2
#endif

// ---------------------------------------------------------------------------
// Runtime dispatch
// ---------------------------------------------------------------------------

namespace {

bool avx2_supported() {
#if SPDC_HAVE_AVX2
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect_isa() {
    if (const char* env = std::getenv("SPDCKIT_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Isa::avx2;
    }
    return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

Isa g_isa = detect_isa();

}  // namespace

Isa active_isa() { return g_isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "?";
}

bool force_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_supported()) return false;
    g_isa = isa;
    return true;
}

void reset_isa() { g_isa = detect_isa(); }

void sellmeier_index(std::span<const double> lam, const SellmeierCoeffs& sc,
                     std::span<double> out) {
    if (out.size() != lam.size()) throw std::invalid_argument("sellmeier_index: size mismatch");
#if SPDC_HAVE_AVX2
    if (g_isa == Isa::avx2) { avx2::sellmeier_index(lam, sc, out); return; }
#endif
    scalar::sellmeier_index(lam, sc, out);
}

void sinc2(std::span<const double> x, std::span<double> out) {
    if (out.size() != x.size()) throw std::invalid_argument("sinc2: size mismatch");
#if SPDC_HAVE_AVX2
    if (g_isa == Isa::avx2) { avx2::sinc2(x, out); return; }
#endif
    scalar::sinc2(x, out);
}

void gaussian(std::span<const double> x, double mu, double sigma,
              std::span<double> out) {
    if (out.size() != x.size()) throw std::invalid_argument("gaussian: size mismatch");
    if (!(sigma > 0.0)) throw std::domain_error("gaussian: sigma must be > 0");
    const double inv_two_sigma2 = 1.0 / (2.0 * sigma * sigma);
#if SPDC_HAVE_AVX2
    if (g_isa == Isa::avx2) { avx2::gaussian(x, mu, inv_two_sigma2, out); return; }
#endif
    scalar::gaussian(x, mu, inv_two_sigma2, out);
}

double sinc2_one(double x) {
    return scalar::sinc2_point(x);
}

}  // namespace spdc::kernels
