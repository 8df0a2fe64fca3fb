#pragma once

#include <cstddef>
#include <span>
#include <string>

// Data-parallel inner loops behind the spectral code paths: Sellmeier index
// evaluation, sinc^2 envelopes and Gaussian weights over wavelength/frequency
// grids. Scalar reference kernels always exist; an AVX2 lane is selected at
// runtime when the CPU supports it. The lanes are equivalence-tested against
// each other (tests/test_kernels.cpp).

namespace spdc::kernels {

enum class Isa {
    scalar,
    avx2,
};

// Lane active for subsequent kernel calls. Auto-detected on first use;
// the SPDCKIT_SIMD environment variable ("scalar"/"avx2") overrides
// detection, force_isa() overrides both (tests use it).
Isa active_isa();
const char* isa_name(Isa isa);

// Returns false if the requested lane is unavailable on this host.
bool force_isa(Isa isa);
void reset_isa();  // back to auto-detection

// Sellmeier fit n^2 = a + b / (1 - c/lam^2) - d*lam^2, lam in um.
struct SellmeierCoeffs {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

// out[i] = sqrt(a + b/(1 - c/lam[i]^2) - d*lam[i]^2)
void sellmeier_index(std::span<const double> lam_um, const SellmeierCoeffs& sc,
                     std::span<double> out);

// out[i] = (sin(x[i])/x[i])^2, with the small-|x| series branch shared by all
// lanes. Arguments are expected in |x| <= 1e8 (far beyond any dk*L/2 here).
void sinc2(std::span<const double> x, std::span<double> out);

// out[i] = exp(-(x[i]-mu)^2 / (2*sigma^2))
void gaussian(std::span<const double> x, double mu, double sigma,
              std::span<double> out);

// Convenience scalar wrappers (single-point evaluations share the lane code).
double sinc2_one(double x);

}  // namespace spdc::kernels
