#pragma once

// Focusing-parameter arithmetic: xi = lambda_p L / (2 pi w_p^2).

namespace spdc {

struct FocusingPlan {
    double xi = 0.0;
    double pump_waist_um = 0.0;
    double signal_waist_um = 0.0;  // collection waists are configuration
    double idler_waist_um = 0.0;   // constants, not derived here
    double pump_nm = 0.0;
    double length_mm = 0.0;
};

// w_p = sqrt(lambda_p L / (2 pi xi)), um.
double waist_from_xi(double xi, double pump_nm, double length_mm);

// Exact inverse of waist_from_xi.
double xi_from_waist(double pump_waist_um, double pump_nm, double length_mm);

}  // namespace spdc
