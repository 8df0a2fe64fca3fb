#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spdc/dispersion.hpp"

// Quasi-phase-matching: dk, poling-period design, tuning curves, sinc^2 joint
// spectral intensity and FWHM emission bandwidth.

namespace spdc {

struct CrystalSpec {
    DispersionTable dispersion;
    double length_mm = 0.0;
    std::optional<double> poling_period_um;  // unset -> solved where allowed
    double temperature_c = 25.0;
    double aperture_mm[2] = {1.0, 1.0};  // informational
};

struct SpdcTriple {
    double pump_nm = 0.0;
    double signal_nm = 0.0;  // signal <= idler by convention
    double idler_nm = 0.0;
};

struct SpectralSample {
    double frequency_ghz;
    double intensity;  // peak-normalized
};

struct SpectralLine {
    double center_frequency_ghz = 0.0;
    double fwhm_ghz = 0.0;  // 0 when not resolved by the samples (warned)
    std::vector<SpectralSample> samples;  // sorted by frequency
    std::vector<std::string> warnings;
};

// 1/pump = 1/result + 1/fixed. Requires fixed > pump > 0.
double conjugate_wavelength(double pump_nm, double fixed_nm);

// Builds the (pump, signal, idler) triple for a pump/idler pair and checks
// energy conservation to 1e-9 relative.
SpdcTriple make_triple(double pump_nm, double idler_nm);
void validate_triple(const SpdcTriple& t);

// k_p - k_s - k_i (the poling-free limit of the mismatch).
double bulk_mismatch(const CrystalSpec& spec, const SpdcTriple& t);

// dk = k_p - k_s - k_i - 2 pi / poling_period, rad/um. Poling period must be set.
double phase_mismatch(const CrystalSpec& spec, const SpdcTriple& t);

// First-order QPM period 2 pi / bulk_mismatch; errors when the bulk
// mismatch is not positive.
double solve_poling_period(const CrystalSpec& spec, const SpdcTriple& t);

// sinc^2(dk L/2) sampled on the idler wavelength grid; peak-normalized.
SpectralLine joint_spectral_intensity(const CrystalSpec& spec, double pump_nm,
                                      std::span<const double> idler_grid_nm);

// FWHM of the idler sinc^2 spectrum in optical frequency, by bracketing +
// bisection on each side of the peak (relative tolerance 1e-6). When the
// spec carries no poling period, one is solved for (pump, idler_center).
double emission_bandwidth(const CrystalSpec& spec, double pump_nm, double idler_center_nm);

struct TuningPoint {
    double pump_nm = 0.0;
    double signal_nm = 0.0;
    double fwhm_ghz = 0.0;
    bool ok = false;
    std::string error;  // set when this point failed
};

struct TuningCurveOptions {
    // Re-solve the poling period at each pump point so every point sits at
    // its own phase-matched peak. With false the spec's period is used as-is.
    bool resolve_poling_per_point = true;
};

std::vector<TuningPoint> tuning_curve(const CrystalSpec& spec, double pump_min_nm,
                                      double pump_max_nm, double idler_fixed_nm,
                                      int n_points, const TuningCurveOptions& opt = {});

// FWHM from a sampled line by linear interpolation of the half-maximum
// crossings around the peak sample; returns 0 and appends a warning when the
// samples do not resolve both crossings.
double measure_fwhm(const std::vector<SpectralSample>& samples, std::vector<std::string>* warnings);

}  // namespace spdc
