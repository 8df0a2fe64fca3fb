#include "spdc/detection.hpp"

#include <cmath>
#include <stdexcept>

#include "spdc/units.hpp"

namespace spdc {

namespace {

struct DeadTimeSolution {
    double accepted_hz;  // measured singles out of the detector
    double eta_dynamic;  // acceptance probability for an arriving photon
};

DeadTimeSolution solve_dead_time(double primary_hz, const DetectorModel& det) {
    if (!(primary_hz >= 0.0)) throw std::invalid_argument("rate must be >= 0");
    const double tau_s = det.dead_time_ns * 1e-9;
    const double p_ap = det.afterpulse_prob;
    double offered = primary_hz;
    double accepted = offered / (1.0 + offered * tau_s);
    for (int it = 0; it < 100; ++it) {
        const double next_offered = primary_hz + accepted * p_ap;
        const double next_accepted = next_offered / (1.0 + next_offered * tau_s);
        const double delta = std::fabs(next_offered - offered);
        offered = next_offered;
        accepted = next_accepted;
        if (delta <= 1e-12 * std::max(1.0, offered))
            return {accepted, 1.0 / (1.0 + offered * tau_s)};
    }
    throw std::runtime_error("dead-time fixed point did not converge in 100 iterations");
}

}  // namespace

double dynamic_efficiency(double rate_hz, const DetectorModel& det) {
    return solve_dead_time(rate_hz, det).eta_dynamic;
}

double capture_fraction(const CoincidenceWindow& win) {
    if (!(win.dt_ps >= 0.0)) throw std::invalid_argument("coincidence window must be >= 0");
    if (!(win.sigma_total_ps > 0.0)) throw std::invalid_argument("sigma_total must be > 0");
    return std::erf(std::sqrt(std::log(2.0)) * win.dt_ps / win.sigma_total_ps);
}

double combine_jitter(std::span<const double> components_fwhm_ps) {
    if (components_fwhm_ps.empty())
        throw std::invalid_argument("combine_jitter: empty component list");
    double sq = 0.0;
    for (double c : components_fwhm_ps) {
        if (!(c > 0.0)) throw std::invalid_argument("combine_jitter: components must be > 0");
        sq += c * c;
    }
    return std::sqrt(sq);
}

RatePrediction predict_rates(double pgr_hz, const ArmBudget& signal, const ArmBudget& idler,
                             const CoincidenceWindow& win) {
    if (!(pgr_hz >= 0.0)) throw std::invalid_argument("pair generation rate must be >= 0");
    for (const ArmBudget* arm : {&signal, &idler})
        if (!(arm->eta_static > 0.0 && arm->eta_static <= 1.0))
            throw std::invalid_argument("eta_static must be in (0, 1]");

    const double prim_s = pgr_hz * signal.eta_static + signal.detector.dark_rate_hz;
    const double prim_i = pgr_hz * idler.eta_static + idler.detector.dark_rate_hz;
    const DeadTimeSolution sol_s = solve_dead_time(prim_s, signal.detector);
    const DeadTimeSolution sol_i = solve_dead_time(prim_i, idler.detector);

    RatePrediction p;
    p.eta_dynamic_signal = sol_s.eta_dynamic;
    p.eta_dynamic_idler = sol_i.eta_dynamic;
    p.s_signal_hz = sol_s.accepted_hz;
    p.s_idler_hz = sol_i.accepted_hz;
    p.c_true_hz = pgr_hz * (signal.eta_static * sol_s.eta_dynamic) *
                  (idler.eta_static * sol_i.eta_dynamic);
    const double dt_s = win.dt_ps * 1e-12;
    p.c_acc_hz = p.s_signal_hz * p.s_idler_hz * dt_s;
    p.capture_fraction = capture_fraction(win);
    p.c_measured_hz = p.capture_fraction * p.c_true_hz + p.c_acc_hz;
    p.eta_herald_signal = p.s_idler_hz > 0.0 ? p.c_true_hz / p.s_idler_hz : 0.0;
    p.eta_herald_idler = p.s_signal_hz > 0.0 ? p.c_true_hz / p.s_signal_hz : 0.0;
    p.occupancy_warning = p.s_signal_hz * dt_s > 0.1 || p.s_idler_hz * dt_s > 0.1;
    return p;
}

}  // namespace spdc
