// AVX2 lane. Vector sin/exp are fdlibm-style: Cody-Waite argument reduction
// with FMA, minimax polynomials on the reduced range. Equivalence against the
// scalar lane is asserted in tests/test_kernels.cpp.

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <span>

#include "spdc/kernels.hpp"

namespace spdc::kernels::avx2 {

namespace {

// pi/2 split (fdlibm pio2_1, pio2_2, pio2_2t)
constexpr double kPio2A = 1.57079632673412561417e+00;
constexpr double kPio2B = 6.07710050630396597660e-11;
constexpr double kPio2C = 2.02226624879595063154e-21;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

// sin/cos kernels on [-pi/4, pi/4] (fdlibm coefficients)
constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

// exp reduction constants
constexpr double kLog2E = 1.44269504088896338700e+00;
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;

// beyond this the vector reduction loses accuracy; the driver falls back
constexpr double kSinRangeMax = 1e8;
constexpr double kSincSeriesCut = 1e-4;  // must match the scalar lane

inline __m256d poly_sin(__m256d r) {
    const __m256d z = _mm256_mul_pd(r, r);
    __m256d p = _mm256_set1_pd(kS6);
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS5));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS4));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS3));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS2));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kS1));
    // r + r^3 * p
    return _mm256_fmadd_pd(_mm256_mul_pd(r, z), p, r);
}

inline __m256d poly_cos(__m256d r) {
    const __m256d z = _mm256_mul_pd(r, r);
    __m256d p = _mm256_set1_pd(kC6);
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC5));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC4));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC3));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC2));
    p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(kC1));
    // 1 - z/2 + z^2 * p
    const __m256d z2 = _mm256_mul_pd(z, z);
    __m256d c = _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0));
    return _mm256_fmadd_pd(z2, p, c);
}

// sin(x) for |x| <= kSinRangeMax
inline __m256d sin4(__m256d x) {
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2A), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2B), r);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2C), r);

    const __m128i q32 = _mm256_cvtpd_epi32(n);
    const __m256i q = _mm256_cvtepi32_epi64(q32);
    const __m256i use_cos64 =
        _mm256_cmpeq_epi64(_mm256_and_si256(q, _mm256_set1_epi64x(1)), _mm256_set1_epi64x(1));
    const __m256i negate64 =
        _mm256_cmpeq_epi64(_mm256_and_si256(q, _mm256_set1_epi64x(2)), _mm256_set1_epi64x(2));

    const __m256d s = poly_sin(r);
    const __m256d c = poly_cos(r);
    __m256d res = _mm256_blendv_pd(s, c, _mm256_castsi256_pd(use_cos64));
    const __m256d signbit = _mm256_and_pd(_mm256_castsi256_pd(negate64), _mm256_set1_pd(-0.0));
    return _mm256_xor_pd(res, signbit);
}

// exp(x) for x in [-708, 708]; lanes below -708 return 0
inline __m256d exp4(__m256d x) {
    const __m256d underflow = _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ);
    x = _mm256_max_pd(x, _mm256_set1_pd(-708.0));
    x = _mm256_min_pd(x, _mm256_set1_pd(708.0));

    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);

    // Taylor/Horner for e^r on [-ln2/2, ln2/2]
    __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);  // 1/13!
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

    // scale by 2^n via exponent bits
    const __m256i n64 = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    const __m256d scale = _mm256_castsi256_pd(bits);
    __m256d res = _mm256_mul_pd(p, scale);
    return _mm256_andnot_pd(underflow, res);
}

inline __m256d abs4(__m256d x) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

inline double sinc2_scalar_ref(double x) {
    const double s = std::sin(x) / x;
    return s * s;
}

}  // namespace

void sellmeier_index(std::span<const double> lam, const SellmeierCoeffs& sc,
                     std::span<double> out) {
    const std::size_t n = lam.size();
    const __m256d a = _mm256_set1_pd(sc.a);
    const __m256d b = _mm256_set1_pd(sc.b);
    const __m256d c = _mm256_set1_pd(sc.c);
    const __m256d d = _mm256_set1_pd(sc.d);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d l = _mm256_loadu_pd(&lam[i]);
        const __m256d l2 = _mm256_mul_pd(l, l);
        const __m256d denom = _mm256_sub_pd(one, _mm256_div_pd(c, l2));
        __m256d n2 = _mm256_add_pd(a, _mm256_div_pd(b, denom));
        n2 = _mm256_fnmadd_pd(d, l2, n2);
        _mm256_storeu_pd(&out[i], _mm256_sqrt_pd(n2));
    }
    for (; i < n; ++i) {
        const double l2 = lam[i] * lam[i];
        out[i] = std::sqrt(sc.a + sc.b / (1.0 - sc.c / l2) - sc.d * l2);
    }
}

void sinc2(std::span<const double> x, std::span<double> out) {
    const std::size_t n = x.size();
    const __m256d cut = _mm256_set1_pd(kSincSeriesCut);
    const __m256d range = _mm256_set1_pd(kSinRangeMax);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(&x[i]);
        const __m256d av = abs4(v);
        const __m256d s = sin4(v);
        __m256d q = _mm256_div_pd(s, v);
        q = _mm256_mul_pd(q, q);

        // small-|x| series branch, identical to the scalar lane
        const __m256d z = _mm256_mul_pd(v, v);
        __m256d ser = _mm256_fmadd_pd(_mm256_mul_pd(z, z), _mm256_set1_pd(1.0 / 120.0),
                                      _mm256_fnmadd_pd(z, _mm256_set1_pd(1.0 / 6.0),
                                                       _mm256_set1_pd(1.0)));
        ser = _mm256_mul_pd(ser, ser);

        const __m256d small = _mm256_cmp_pd(av, cut, _CMP_LT_OQ);
        __m256d res = _mm256_blendv_pd(q, ser, small);
        _mm256_storeu_pd(&out[i], res);

        const __m256d big = _mm256_cmp_pd(av, range, _CMP_GT_OQ);
        if (_mm256_movemask_pd(big)) {
            for (int k = 0; k < 4; ++k)
                if (std::fabs(x[i + k]) > kSinRangeMax) out[i + k] = sinc2_scalar_ref(x[i + k]);
        }
    }
    for (; i < n; ++i) {
        const double ax = std::fabs(x[i]);
        if (ax < kSincSeriesCut) {
            const double z = x[i] * x[i];
            const double s = 1.0 - z * (1.0 / 6.0) + z * z * (1.0 / 120.0);
            out[i] = s * s;
        } else if (ax > kSinRangeMax) {
            out[i] = sinc2_scalar_ref(x[i]);
        } else {
            double buf[4] = {x[i], 0.0, 0.0, 0.0};
            double res[4];
            _mm256_storeu_pd(res, sin4(_mm256_loadu_pd(buf)));
            const double s = res[0] / x[i];
            out[i] = s * s;
        }
    }
}

void gaussian(std::span<const double> x, double mu, double inv_two_sigma2,
              std::span<double> out) {
    const std::size_t n = x.size();
    const __m256d vmu = _mm256_set1_pd(mu);
    const __m256d vk = _mm256_set1_pd(inv_two_sigma2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(&x[i]), vmu);
        const __m256d arg = _mm256_mul_pd(_mm256_mul_pd(d, d), vk);
        _mm256_storeu_pd(&out[i], exp4(_mm256_xor_pd(arg, _mm256_set1_pd(-0.0))));
    }
    for (; i < n; ++i) {
        const double d = x[i] - mu;
        double buf[4] = {-d * d * inv_two_sigma2, 0.0, 0.0, 0.0};
        double res[4];
        _mm256_storeu_pd(res, exp4(_mm256_loadu_pd(buf)));
        out[i] = res[0];
    }
}

}  // namespace spdc::kernels::avx2
