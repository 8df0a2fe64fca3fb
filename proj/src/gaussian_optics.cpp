#include "spdc/gaussian_optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spdc/units.hpp"

namespace spdc {

namespace {
void check_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::domain_error(strf("%s must be > 0 (got %.6g)", name, v));
}
}  // namespace

double waist_from_xi(double xi, double pump_nm, double length_mm) {
    check_positive(xi, "focusing parameter");
    check_positive(pump_nm, "pump wavelength");
    check_positive(length_mm, "crystal length");
    const double lam_um = nm_to_um(pump_nm);
    const double len_um = length_mm * 1e3;
    return std::sqrt(lam_um * len_um / (2.0 * std::numbers::pi * xi));
}

double xi_from_waist(double pump_waist_um, double pump_nm, double length_mm) {
    check_positive(pump_waist_um, "pump waist");
    check_positive(pump_nm, "pump wavelength");
    check_positive(length_mm, "crystal length");
    const double lam_um = nm_to_um(pump_nm);
    const double len_um = length_mm * 1e3;
    return lam_um * len_um / (2.0 * std::numbers::pi * pump_waist_um * pump_waist_um);
}

}  // namespace spdc
