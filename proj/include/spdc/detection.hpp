#pragma once

#include <span>

// Analytical forward model of measured singles and coincidences from source
// brightness and detector imperfections, and its inversion into heralding
// efficiencies.

namespace spdc {

struct DetectorModel {
    double pde = 1.0;              // folded into ArmBudget::eta_static
    double dead_time_ns = 0.0;     // non-paralyzable
    double dark_rate_hz = 0.0;     // includes stray background
    double afterpulse_prob = 0.0;  // per accepted event
    double afterpulse_tau_ns = 0.0;
    double jitter_fwhm_ps = 0.0;   // Gaussian
};

struct ArmBudget {
    // Product of source, coupling and transmission efficiencies and the PDE.
    double eta_static = 1.0;
    DetectorModel detector;
};

struct CoincidenceWindow {
    double dt_ps = 0.0;
    double sigma_total_ps = 0.0;  // FWHM-equivalent combined jitter
};

struct RatePrediction {
    double s_signal_hz = 0.0;  // measured singles
    double s_idler_hz = 0.0;
    double c_true_hz = 0.0;
    double c_acc_hz = 0.0;
    double c_measured_hz = 0.0;       // F*c_true + c_acc
    double capture_fraction = 0.0;
    double eta_herald_signal = 0.0;   // c_true / s_idler
    double eta_herald_idler = 0.0;    // c_true / s_signal
    double eta_dynamic_signal = 1.0;
    double eta_dynamic_idler = 1.0;
    bool occupancy_warning = false;   // singles*dt above 0.1 on either arm
};

// Photon acceptance probability under non-paralyzable dead time with the
// afterpulse load folded in: offered = rate + accepted*p_ap,
// accepted = offered/(1+offered*tau), eta = 1/(1+offered*tau). Solved by
// fixed point (<=100 iterations, 1e-12); errors if it fails to settle.
double dynamic_efficiency(double rate_hz, const DetectorModel& det);

// F = erf(sqrt(ln 2) * dt / sigma_total). Exact for Gaussian per-detector
// jitter and the symmetric window |t_a - t_b| <= dt/2 when sigma_total is the
// FWHM of the arrival-time-difference distribution.
double capture_fraction(const CoincidenceWindow& win);

// Root-sum-square of FWHM components, ps.
double combine_jitter(std::span<const double> components_fwhm_ps);

RatePrediction predict_rates(double pgr_hz, const ArmBudget& signal, const ArmBudget& idler,
                             const CoincidenceWindow& win);

}  // namespace spdc
