#include "spdc/phasematch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spdc/kernels.hpp"
#include "spdc/units.hpp"

namespace spdc {

namespace {

constexpr double kEnergyTol = 1e-9;

void check_spec(const CrystalSpec& spec) {
    if (!(spec.length_mm > 0.0)) throw std::invalid_argument("crystal length must be > 0");
    if (spec.poling_period_um && !(*spec.poling_period_um > 0.0))
        throw std::invalid_argument("poling period must be > 0");
}

double length_um(const CrystalSpec& spec) { return spec.length_mm * 1e3; }

// dk at a given idler frequency for a fixed pump, rad/um.
double mismatch_at(const CrystalSpec& spec, double pump_nm, double idler_ghz, double poling_um) {
    const double idler_nm = ghz_to_nm(idler_ghz);
    const double signal_nm = conjugate_wavelength(pump_nm, idler_nm);
    const double kp = wave_number_um(spec.dispersion, nm_to_um(pump_nm), spec.temperature_c);
    const double ks = wave_number_um(spec.dispersion, nm_to_um(signal_nm), spec.temperature_c);
    const double ki = wave_number_um(spec.dispersion, nm_to_um(idler_nm), spec.temperature_c);
    return kp - ks - ki - 2.0 * std::numbers::pi / poling_um;
}

}  // namespace

double conjugate_wavelength(double pump_nm, double fixed_nm) {
    if (!(pump_nm > 0.0)) throw std::invalid_argument("pump wavelength must be > 0");
    if (!(fixed_nm > pump_nm))
        throw std::invalid_argument(strf(
            "no physical conjugate: fixed wavelength %.6g nm must exceed pump %.6g nm",
            fixed_nm, pump_nm));
    return 1.0 / (1.0 / pump_nm - 1.0 / fixed_nm);
}

SpdcTriple make_triple(double pump_nm, double idler_nm) {
    const double other = conjugate_wavelength(pump_nm, idler_nm);
    SpdcTriple t{pump_nm, std::min(other, idler_nm), std::max(other, idler_nm)};
    validate_triple(t);
    return t;
}

void validate_triple(const SpdcTriple& t) {
    if (!(t.pump_nm > 0 && t.signal_nm > 0 && t.idler_nm > 0))
        throw std::invalid_argument("triple wavelengths must be > 0");
    if (t.signal_nm > t.idler_nm)
        throw std::invalid_argument("triple convention violated: signal > idler");
    const double lhs = 1.0 / t.pump_nm;
    const double rhs = 1.0 / t.signal_nm + 1.0 / t.idler_nm;
    if (std::fabs(lhs - rhs) > kEnergyTol * lhs)
        throw std::invalid_argument(strf(
            "triple violates energy conservation: |1/lp - 1/ls - 1/li| = %.3g of 1/lp",
            std::fabs(lhs - rhs) / lhs));
}

double bulk_mismatch(const CrystalSpec& spec, const SpdcTriple& t) {
    check_spec(spec);
    validate_triple(t);
    const double kp = wave_number_um(spec.dispersion, nm_to_um(t.pump_nm), spec.temperature_c);
    const double ks = wave_number_um(spec.dispersion, nm_to_um(t.signal_nm), spec.temperature_c);
    const double ki = wave_number_um(spec.dispersion, nm_to_um(t.idler_nm), spec.temperature_c);
    return kp - ks - ki;
}

double phase_mismatch(const CrystalSpec& spec, const SpdcTriple& t) {
    if (!spec.poling_period_um)
        throw std::invalid_argument("phase_mismatch: poling period is unset");
    return bulk_mismatch(spec, t) - 2.0 * std::numbers::pi / *spec.poling_period_um;
}

double solve_poling_period(const CrystalSpec& spec, const SpdcTriple& t) {
    const double bulk = bulk_mismatch(spec, t);
    if (!(bulk > 0.0))
        throw std::domain_error(strf(
            "no first-order QPM solution: bulk mismatch %.6g rad/um is not positive", bulk));
    return 2.0 * std::numbers::pi / bulk;
}

SpectralLine joint_spectral_intensity(const CrystalSpec& spec, double pump_nm,
                                      std::span<const double> idler_grid_nm) {
    check_spec(spec);
    if (idler_grid_nm.empty()) throw std::invalid_argument("joint_spectral_intensity: empty grid");
    if (!spec.poling_period_um)
        throw std::invalid_argument("joint_spectral_intensity: poling period is unset");
    const double poling = *spec.poling_period_um;
    const double half_len = 0.5 * length_um(spec);

    const std::size_t n = idler_grid_nm.size();
    std::vector<double> lam_i(n), lam_s(n), n_i(n), n_s(n), x(n);
    for (std::size_t k = 0; k < n; ++k) {
        lam_i[k] = nm_to_um(idler_grid_nm[k]);
        lam_s[k] = nm_to_um(conjugate_wavelength(pump_nm, idler_grid_nm[k]));
    }
    refractive_index_grid(spec.dispersion, lam_i, spec.temperature_c, n_i);
    refractive_index_grid(spec.dispersion, lam_s, spec.temperature_c, n_s);
    const double kp = wave_number_um(spec.dispersion, nm_to_um(pump_nm), spec.temperature_c);
    const double kg = 2.0 * std::numbers::pi / poling;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = kp - two_pi * n_s[k] / lam_s[k] - two_pi * n_i[k] / lam_i[k] - kg;
        x[k] = dk * half_len;
    }
    std::vector<double> inten(n);
    kernels::sinc2(x, inten);

    SpectralLine line;
    line.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        line.samples[k] = {nm_to_ghz(idler_grid_nm[k]), inten[k]};
    std::sort(line.samples.begin(), line.samples.end(),
              [](const SpectralSample& a, const SpectralSample& b) {
                  return a.frequency_ghz < b.frequency_ghz;
              });
    double peak = 0.0;
    double peak_freq = line.samples.front().frequency_ghz;
    for (const auto& s : line.samples)
        if (s.intensity > peak) { peak = s.intensity; peak_freq = s.frequency_ghz; }
    if (peak > 0.0)
        for (auto& s : line.samples) s.intensity /= peak;
    line.center_frequency_ghz = peak_freq;
    line.fwhm_ghz = measure_fwhm(line.samples, &line.warnings);
    return line;
}

double measure_fwhm(const std::vector<SpectralSample>& samples,
                    std::vector<std::string>* warnings) {
    if (samples.size() < 3) {
        if (warnings) warnings->push_back("too few samples to measure a width");
        return 0.0;
    }
    std::size_t ipk = 0;
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].intensity > samples[ipk].intensity) ipk = i;
    const double half = 0.5 * samples[ipk].intensity;

    auto cross = [&](bool left) -> double {
        if (left) {
            for (std::size_t i = ipk; i-- > 0;) {
                if (samples[i].intensity < half) {
                    const auto& a = samples[i];
                    const auto& b = samples[i + 1];
                    return a.frequency_ghz + (half - a.intensity) / (b.intensity - a.intensity) *
                                                 (b.frequency_ghz - a.frequency_ghz);
                }
            }
        } else {
            for (std::size_t i = ipk + 1; i < samples.size(); ++i) {
                if (samples[i].intensity < half) {
                    const auto& a = samples[i - 1];
                    const auto& b = samples[i];
                    return a.frequency_ghz + (half - a.intensity) / (b.intensity - a.intensity) *
                                                 (b.frequency_ghz - a.frequency_ghz);
                }
            }
        }
        return std::numeric_limits<double>::quiet_NaN();
    };
    const double lo = cross(true);
    const double hi = cross(false);
    if (std::isnan(lo) || std::isnan(hi)) {
        if (warnings)
            warnings->push_back("half-maximum crossings not resolved by the sample grid");
        return 0.0;
    }
    return hi - lo;
}

double emission_bandwidth(const CrystalSpec& spec, double pump_nm, double idler_center_nm) {
    check_spec(spec);
    const SpdcTriple center = make_triple(pump_nm, idler_center_nm);
    const double poling =
        spec.poling_period_um ? *spec.poling_period_um : solve_poling_period(spec, center);
    const double half_len = 0.5 * length_um(spec);
    const double nu0 = nm_to_ghz(idler_center_nm);

    auto intensity = [&](double nu_ghz) {
        return kernels::sinc2_one(mismatch_at(spec, pump_nm, nu_ghz, poling) * half_len);
    };

    // Locate the peak: root of dk in frequency. With a solved period the
    // center frequency already is the root.
    double nu_peak = nu0;
    if (spec.poling_period_um) {
        double f0 = mismatch_at(spec, pump_nm, nu0, poling);
        if (f0 != 0.0) {
            const double slope =
                (mismatch_at(spec, pump_nm, nu0 * (1 + 1e-6), poling) -
                 mismatch_at(spec, pump_nm, nu0 * (1 - 1e-6), poling)) / (2e-6 * nu0);
            double step = -f0 / slope;
            double a = nu0, fa = f0;
            double b = nu0 + 2.0 * step;
            double fb = mismatch_at(spec, pump_nm, b, poling);
            int grow = 0;
            while (fa * fb > 0.0 && ++grow < 40) {
                b += 2.0 * step;
                fb = mismatch_at(spec, pump_nm, b, poling);
            }
            if (fa * fb > 0.0)
                throw std::runtime_error(strf(
                    "no phase-matched peak near %.6g GHz (searched to %.6g GHz)", nu0, b));
            for (int it = 0; it < 200 && std::fabs(b - a) > 1e-9 * nu0; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = mismatch_at(spec, pump_nm, m, poling);
                if (fa * fm <= 0.0) { b = m; fb = fm; } else { a = m; fa = fm; }
            }
            nu_peak = 0.5 * (a + b);
        }
    }

    // Initial half-width guess from the local slope of dk.
    const double ddk =
        (mismatch_at(spec, pump_nm, nu_peak + 1.0, poling) -
         mismatch_at(spec, pump_nm, nu_peak - 1.0, poling)) / 2.0;  // rad/um per GHz
    constexpr double kHalfMaxArg = 1.39155737825151;  // sinc^2(x) = 1/2
    double guess = std::fabs(kHalfMaxArg / (ddk * half_len));
    if (!(guess > 0.0) || !std::isfinite(guess)) guess = 0.01 * nu_peak;

    auto half_cross = [&](double direction) {
        const double window = 50.0 * guess + 0.2 * nu_peak;
        double inner = nu_peak;
        double outer = nu_peak + direction * guess;
        int expand = 0;
        while (intensity(outer) > 0.5) {
            inner = outer;
            outer += direction * guess;
            if (std::fabs(outer - nu_peak) > window || ++expand > 500)
                throw std::runtime_error(strf(
                    "no half-maximum crossing between %.6g and %.6g GHz", nu_peak,
                    nu_peak + direction * window));
        }
        while (std::fabs(outer - inner) > 1e-6 * std::fabs(nu_peak - outer) + 1e-12 * nu_peak) {
            const double m = 0.5 * (inner + outer);
            if (intensity(m) > 0.5) inner = m; else outer = m;
        }
        return 0.5 * (inner + outer);
    };

    const double hi = half_cross(+1.0);
    const double lo = half_cross(-1.0);
    return hi - lo;
}

std::vector<TuningPoint> tuning_curve(const CrystalSpec& spec, double pump_min_nm,
                                      double pump_max_nm, double idler_fixed_nm,
                                      int n_points, const TuningCurveOptions& opt) {
    if (n_points < 2) throw std::invalid_argument("tuning_curve: need at least 2 points");
    if (!(pump_max_nm > pump_min_nm))
        throw std::invalid_argument("tuning_curve: pump range must be increasing");
    check_spec(spec);
    if (!opt.resolve_poling_per_point && !spec.poling_period_um)
        throw std::invalid_argument("tuning_curve: fixed-period mode needs a poling period");

    std::vector<TuningPoint> out(n_points);
    for (int i = 0; i < n_points; ++i) {
        TuningPoint& p = out[i];
        p.pump_nm = pump_min_nm + (pump_max_nm - pump_min_nm) * i / (n_points - 1);
        try {
            p.signal_nm = conjugate_wavelength(p.pump_nm, idler_fixed_nm);
            CrystalSpec local = spec;
            if (opt.resolve_poling_per_point)
                local.poling_period_um =
                    solve_poling_period(spec, make_triple(p.pump_nm, idler_fixed_nm));
            p.fwhm_ghz = emission_bandwidth(local, p.pump_nm, idler_fixed_nm);
            p.ok = true;
        } catch (const std::exception& e) {
            p.ok = false;
            p.error = e.what();
        }
    }
    return out;
}

}  // namespace spdc
